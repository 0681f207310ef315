//! Exhaustive search for primitive ordered identities of an automorphism.

use crate::automorphism::Automorphism;
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Maximum number of coefficient vectors examined.
    pub budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { budget: 2_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Primitive identities ordered by degree, then by `(a_0, ..., a_d)`.
    pub identities: Vec<IntPolynomial>,
    /// Coefficients range over `-bound..=bound`.
    pub bound: i64,
    pub examined: u64,
    /// Set when the budget ran out before the search finished.
    pub partial: bool,
}

/// The effective coefficient bound `min(coeff_bound, max(1, exponent / 2))`.
pub fn effective_bound(phi: &Automorphism, coeff_bound: i64) -> i64 {
    let half = (phi.group().exponent() / 2).max(1) as i64;
    coeff_bound.min(half).max(0)
}

/// All primitive ordered identities of degree at most `max_degree` whose
/// coefficients lie in the effective range.
pub fn identity_search(
    phi: &Automorphism,
    max_degree: usize,
    coeff_bound: i64,
    limits: SearchLimits,
) -> SearchResult {
    let g = phi.group();
    let bound = effective_bound(phi, coeff_bound);
    let width = (2 * bound + 1) as usize;
    // powers[i][x][c] = (phi^i(x))^(c - bound)
    let mut orbit: Vec<usize> = g.elements().collect();
    let mut powers: Vec<Vec<Vec<usize>>> = Vec::with_capacity(max_degree + 1);
    for _ in 0..=max_degree {
        powers.push(
            orbit
                .iter()
                .map(|&y| (0..width).map(|c| g.pow(y, c as i64 - bound)).collect())
                .collect(),
        );
        orbit = orbit.iter().map(|&y| phi.apply(y)).collect();
    }
    // identity and generators first; a violation is usually visible on them
    let mut order: Vec<usize> = g.generators().to_vec();
    order.extend(g.elements().filter(|x| !g.generators().contains(x) && *x != g.identity()));

    let mut result = SearchResult {
        identities: Vec::new(),
        bound,
        examined: 0,
        partial: false,
    };
    if bound == 0 {
        return result;
    }
    for d in 0..=max_degree {
        let mut digits = vec![0usize; d + 1];
        loop {
            let top = digits[d] as i64 - bound;
            if top != 0 {
                if result.examined >= limits.budget {
                    result.partial = true;
                    return result;
                }
                result.examined += 1;
                let holds = order.iter().all(|&x| {
                    digits
                        .iter()
                        .enumerate()
                        .fold(g.identity(), |acc, (i, &c)| g.mul(acc, powers[i][x][c]))
                        == g.identity()
                });
                if holds {
                    let coeffs: Vec<i64> = digits.iter().map(|&c| c as i64 - bound).collect();
                    let f = IntPolynomial::from_i64(&coeffs);
                    if f.is_primitive() {
                        result.identities.push(f);
                    }
                }
            }
            // lexicographic in (a_0, ..., a_d): a_d varies fastest
            if !step(&mut digits, width) {
                break;
            }
        }
    }
    result
}

fn step(digits: &mut [usize], width: usize) -> bool {
    for x in digits.iter_mut().rev() {
        *x += 1;
        if *x < width {
            return true;
        }
        *x = 0;
    }
    false
}
