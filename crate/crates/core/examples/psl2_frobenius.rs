//! PSL(2, q) as a permutation group on the projective line, with the field
//! automorphism acting on it.

use fitbound::constructions::Psl2;

fn main() {
    for q in [4, 8, 9, 27, 32] {
        let g = Psl2::new(q).unwrap();
        let phi = g.frobenius_action(1).unwrap();
        println!(
            "PSL(2,{q:>2}): order {:>5} (formula {:>5}), frobenius order {}, fixed points {:>2}, coprime {}",
            g.group().order(),
            Psl2::order_formula(q),
            phi.order(),
            phi.fixed_point_count(),
            phi.is_coprime()
        );
    }
}
