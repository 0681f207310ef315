//! Runs the embedded catalog and prints one line per entry plus the start of
//! the JSON report.

use std::path::Path;

use fitbound::harness::{run_catalog, Catalog, Format};

fn main() {
    let report = run_catalog(&Catalog::builtin(), Path::new(".")).expect("builtin entries resolve");
    for line in report.summary_lines() {
        println!("{line}");
    }
    let json = report.render(Format::Json, false);
    for line in json.lines().take(12) {
        println!("{line}");
    }
    println!("exit code would be {}", report.exit_code());
}
