//! Arithmetic in GF(3^2): the modulus, a primitive element, inverses and the
//! Frobenius map.

use fitbound::field::FiniteField;

fn main() {
    let k = FiniteField::new(3, 2).expect("9 is a prime power");
    println!("GF({}) with modulus coefficients {:?}", k.order(), k.modulus());
    let w = k.omega();
    println!("primitive element w has multiplicative order {:?}", k.multiplicative_order(w));

    for i in 0..8 {
        let x = k.omega_pow(i);
        let inv = k.inv(x).unwrap();
        println!(
            "w^{i} = {:?}   inverse {:?}   frobenius {:?}",
            k.coeffs(x),
            k.coeffs(inv),
            k.coeffs(k.frobenius_apply(x, 1))
        );
    }

    let fixed = k.elements().filter(|&t| k.frobenius_apply(t, 1) == t).count();
    println!("elements fixed by t -> t^3: {fixed}");
}
