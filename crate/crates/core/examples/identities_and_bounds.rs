//! Checking a polynomial identity for an automorphism and evaluating the
//! explicit bounds attached to it.

use fitbound::automorphism::Automorphism;
use fitbound::bounds::{b1, b2, corollary_bound};
use fitbound::constructions::{poly, stock};
use fitbound::poly::UnorderedIdentity;

fn main() {
    let c7 = stock("C7").unwrap();
    let phi = Automorphism::power_map(&c7, 2).unwrap();
    let f = poly(&[-2, 1]);
    println!("phi: g -> g^2 on C7 has order {} and fixes {} element(s)", phi.order(), phi.fixed_point_count());
    println!("{f} is an identity: {}", phi.satisfies_ordered(&f));
    println!("{} is an identity: {}", poly(&[-1, 1]), phi.satisfies_ordered(&poly(&[-1, 1])));

    let u = UnorderedIdentity::from_i64(&[(1, 1), (0, -2)]);
    println!("unordered form holds: {}", phi.satisfies_unordered(&u));

    for (d, m) in [(1, 1), (2, 3), (3, 6), (5, 6)] {
        let big = b2(d, m).unwrap();
        println!("d = {d}, m = {m}: B1 = {}, B2 = {}", b1(d, m), big.summary());
    }
    println!("corollary bound for {f}: {}", corollary_bound(&f).unwrap());
}
