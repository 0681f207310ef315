//! Brute-force reference computations shared by the integration tests.
//!
//! Nothing here calls the library's structure code. Groups are only used
//! through `mul`, `inv` and element enumeration, and every subgroup is a
//! plain sorted vector of element indices.

#![allow(dead_code)]

use std::collections::BTreeSet;

use fitbound::automorphism::Automorphism;
use fitbound::group::Group;

pub type Set = BTreeSet<usize>;

/// Closure of `seeds` under multiplication.
pub fn generated(g: &Group, seeds: impl IntoIterator<Item = usize>) -> Set {
    let seeds: Vec<usize> = seeds.into_iter().collect::<Set>().into_iter().collect();
    let mut set: Set = std::iter::once(g.identity()).collect();
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in &seeds {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Smallest normal subgroup containing `seeds`.
pub fn normal_closure(g: &Group, seeds: impl IntoIterator<Item = usize>) -> Set {
    let mut conjugates = Set::new();
    for x in seeds {
        for y in g.elements() {
            conjugates.insert(g.mul(g.mul(y, x), g.inv(y)));
        }
    }
    generated(g, conjugates)
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Order of `x` modulo the normal subgroup `n`.
fn order_mod(g: &Group, x: usize, n: &Set) -> u64 {
    let mut y = x;
    let mut k = 1;
    while !n.contains(&y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// `h/n` is nilpotent iff, for every prime `p`, its `p`-elements number
/// exactly the `p`-part of `|h/n|` (each Sylow subgroup is then unique).
/// Cosets are counted through their members, each coset having `|n|` of them.
pub fn nilpotent_mod(g: &Group, h: &Set, n: &Set) -> bool {
    let index = (h.len() / n.len()) as u64;
    prime_factors(index).into_iter().all(|p| {
        let p_elements = h.iter().filter(|&&x| is_power_of(order_mod(g, x, n), p)).count() as u64;
        p_elements == p_part(index, p) * n.len() as u64
    })
}

pub fn is_nilpotent(g: &Group, h: &Set) -> bool {
    nilpotent_mod(g, h, &std::iter::once(g.identity()).collect())
}

pub fn is_soluble(g: &Group, h: &Set) -> bool {
    let mut current = h.clone();
    loop {
        if current.len() == 1 {
            return true;
        }
        let commutators: Set = current
            .iter()
            .flat_map(|&a| current.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))
            .collect();
        let next = generated(g, commutators);
        if next.len() == current.len() {
            return false;
        }
        current = next;
    }
}

/// `{x : <x^G> has property P}`. For subgroup-closed properties preserved by
/// products of normal subgroups this is the largest normal P-subgroup.
pub fn largest_normal(g: &Group, pred: impl Fn(&Set) -> bool) -> Set {
    g.elements().filter(|&x| pred(&normal_closure(g, [x]))).collect()
}

pub fn fitting(g: &Group) -> Set {
    largest_normal(g, |n| is_nilpotent(g, n))
}

pub fn radical(g: &Group) -> Set {
    largest_normal(g, |n| is_soluble(g, n))
}

pub fn o_qprime(g: &Group, q: u64) -> Set {
    largest_normal(g, |n| !(n.len() as u64).is_multiple_of(q))
}

/// Preimage of `O_q(G / O_{q'}(G))`.
pub fn o_qprime_q(g: &Group, q: u64) -> Set {
    let lower = o_qprime(g, q);
    g.elements()
        .filter(|&x| {
            let n = generated(g, normal_closure(g, [x]).into_iter().chain(lower.iter().copied()));
            is_power_of((n.len() / lower.len()) as u64, q)
        })
        .collect()
}

/// Fitting height via `F_{i+1} = {x : <x^G> F_i / F_i nilpotent}`.
pub fn fitting_height(g: &Group) -> Option<usize> {
    let mut current: Set = std::iter::once(g.identity()).collect();
    let mut h = 0;
    while current.len() < g.order() {
        let next: Set = g
            .elements()
            .filter(|&x| {
                let n = generated(g, normal_closure(g, [x]).into_iter().chain(current.iter().copied()));
                nilpotent_mod(g, &n, &current)
            })
            .collect();
        if next.len() == current.len() {
            return None;
        }
        current = next;
        h += 1;
    }
    Some(h)
}

/// `prod_i phi^i(x)^(a_i)` computed by repeated multiplication.
pub fn identity_value(phi: &Automorphism, coeffs: &[i64], x: usize) -> usize {
    let g = phi.group();
    let mut acc = g.identity();
    let mut y = x;
    for (i, &a) in coeffs.iter().enumerate() {
        if i > 0 {
            y = phi.apply(y);
        }
        let base = if a < 0 { g.inv(y) } else { y };
        for _ in 0..a.unsigned_abs() {
            acc = g.mul(acc, base);
        }
    }
    acc
}

pub fn satisfies(phi: &Automorphism, coeffs: &[i64]) -> bool {
    let g = phi.group();
    g.elements().all(|x| identity_value(phi, coeffs, x) == g.identity())
}

pub fn fixed_points(phi: &Automorphism) -> Set {
    phi.group().elements().filter(|&x| phi.apply(x) == x).collect()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// The integer vector of a polynomial's coefficients.
pub fn coeffs_of(f: &fitbound::poly::IntPolynomial) -> Vec<i64> {
    f.coeffs().iter().map(|c| i64::try_from(c).expect("small coefficient")).collect()
}
