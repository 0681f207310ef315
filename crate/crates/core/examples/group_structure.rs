//! Soluble radical, Fitting series and O_{q',q} for a few small groups.

use fitbound::constructions::stock;
use fitbound::group::direct_product;
use fitbound::structure::{fitting_series, fitting_subgroup, o_qprime_q, soluble_radical};

fn main() {
    for name in ["S3", "S4", "A4", "D8", "A5"] {
        let g = stock(name).unwrap();
        let r = soluble_radical(&g);
        let f = fitting_subgroup(&g);
        print!("{name:>3}: |G| = {:>3}, |R| = {:>3}, |F| = {:>2}", g.order(), r.order(), f.order());
        match fitting_series(&g) {
            Ok(series) => {
                let orders: Vec<usize> = series.terms.iter().map(|t| t.order()).collect();
                println!(", Fitting series {orders:?}, h = {}", series.height());
            }
            Err(e) => println!(", {e}"),
        }
    }

    // The radical of A5 x C6 is the C6 factor.
    let (g, _) = direct_product(&[stock("A5").unwrap(), stock("C6").unwrap()]).unwrap();
    println!("A5 x C6: |R| = {}", soluble_radical(&g).order());

    let s4 = stock("S4").unwrap();
    for q in [2, 3] {
        println!("S4: |O_{{{q}',{q}}}| = {}", o_qprime_q(&s4, q).unwrap().order());
    }
}
