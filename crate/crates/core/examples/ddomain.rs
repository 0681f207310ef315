//! The group D(N, K) on pairs (s, u) over K = GF(q^2), with its Frobenius
//! automorphism.

use fitbound::constructions::DDomain;

fn main() {
    for p in [2, 3, 5] {
        for n in 0..p as i64 {
            let d = DDomain::new(p, 1, n).unwrap();
            let phi = d.frobenius(1).unwrap();
            println!(
                "q = {p}, N = {n}: order {:>4}, axioms {:?}, projection onto K {}, \
                 frobenius order {}, fixed points {}, coprime {}",
                d.group().order(),
                d.check_axioms().map(|_| "ok"),
                if d.projection_surjective() { "onto" } else { "not onto" },
                phi.order(),
                phi.fixed_point_count(),
                phi.is_coprime(),
            );
        }
    }
}
