//! Enumerates short primitive identities for a few automorphisms.

use fitbound::automorphism::Automorphism;
use fitbound::constructions::{companion_action, poly, stock, DDomain};
use fitbound::harness::search::{identity_search, SearchLimits};

fn show(name: &str, phi: &Automorphism, max_degree: usize, coeff_bound: i64) {
    let r = identity_search(phi, max_degree, coeff_bound, SearchLimits::default());
    let list: Vec<String> = r.identities.iter().take(6).map(|f| f.to_string()).collect();
    println!(
        "{name}: {} identities with |a_i| <= {} (showing {}): {}",
        r.identities.len(),
        r.bound,
        list.len(),
        list.join(", ")
    );
}

fn main() {
    let c7 = stock("C7").unwrap();
    show("C7, g -> g^2", &Automorphism::power_map(&c7, 2).unwrap(), 2, 3);

    let v4 = companion_action(2, &poly(&[1, 1, 1])).unwrap();
    show("V4, companion of 1 + x + x^2", &v4.automorphism, 2, 1);

    let d = DDomain::new(3, 1, 1).unwrap();
    show("D(1, GF(9)), frobenius", &d.frobenius(1).unwrap(), 2, 4);
}
