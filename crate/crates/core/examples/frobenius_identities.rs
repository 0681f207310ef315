//! Minimal additive identities of t -> t^p on GF(p^e) and the Vandermonde
//! determinants that detect them.

use fitbound::field::FiniteField;
use fitbound::frobid::{has_repeated_exponent, min_primitive_identity_degree, vandermonde_det};

fn main() {
    for (p, e) in [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2)] {
        let k = FiniteField::new(p, e).unwrap();
        let found = min_primitive_identity_degree(&k, p, 8).unwrap();
        let dets: Vec<&str> = (1..=e as usize)
            .map(|d| {
                let zero = vandermonde_det(&k, p, d).unwrap().is_zero();
                assert_eq!(zero, has_repeated_exponent(k.order(), p, d));
                if zero { "0" } else { "*" }
            })
            .collect();
        println!(
            "GF({:>3}) t -> t^{p}: minimal degree {}, identity {}, determinants {}",
            k.order(),
            found.degree,
            found.identity,
            dets.join("")
        );
    }
}
