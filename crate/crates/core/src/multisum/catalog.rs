//! Constructors for every sum used by the identity catalog.
//!
//! Variable order follows the summation indices `i, j, k, l` of each sum.

use super::{MultisumSpec, SlaterSum, Tail};
use crate::error::{Error, Result};

/// The Andrews-Gordon sum for `1 <= i <= k`, `k >= 2`, in the variables
/// `n_1..n_{k-1}`. Expanding `sum_j N_j^2 + sum_{j>=i} N_j` with
/// `N_j = n_j + .. + n_{k-1}` gives `d_a = 2a`, `a_{ab} = 2 min(a,b)` and
/// `B_a = a + max(0, a - i + 1)`.
pub fn andrews_gordon_spec(k: usize, i: usize) -> Result<MultisumSpec> {
    if k < 2 || i < 1 || i > k {
        return Err(Error::InvalidSpec(format!("Andrews-Gordon needs k >= 2 and 1 <= i <= k, got k={k}, i={i}")));
    }
    let s = k - 1;
    let diag: Vec<usize> = (1..=s).map(|a| 2 * a).collect();
    let linear: Vec<usize> = (1..=s).map(|a| a + (a + 1).saturating_sub(i)).collect();
    let mut cross = Vec::new();
    for a in 1..=s {
        for b in a + 1..=s {
            cross.push((a - 1, b - 1, 2 * a));
        }
    }
    MultisumSpec::from_parts(&diag, &cross, &linear, &[], &[])
}

/// Level 5 triple sums, `a` in {0, 1}.
pub fn level5_triple_sum(a: usize) -> Result<MultisumSpec> {
    check_a(a, 0, 1)?;
    MultisumSpec::from_parts(
        &[1, 8, 2],
        &[(0, 1, 2), (0, 2, 2), (1, 2, 4)],
        &[1, 5 + 2 * a, 1 + 2 * a],
        &[0, 0, 1],
        &[1, 2, 2],
    )
}

/// Level 7 triple sums, `a` in {0, 1}.
pub fn level7_triple_sum(a: usize) -> Result<MultisumSpec> {
    check_a(a, 0, 1)?;
    MultisumSpec::from_parts(
        &[1, 8, 10],
        &[(0, 1, 2), (0, 2, 2), (1, 2, 8)],
        &[1, 4 + 4 * a, 5 + 4 * a],
        &[],
        &[1, 2, 2],
    )
}

const QUAD_CROSS: [(usize, usize, usize); 6] = [(0, 1, 1), (0, 2, 1), (0, 3, 2), (1, 2, 4), (1, 3, 4), (2, 3, 4)];

/// Level 7 quadruple sums as stated in the theorem, sign `(-1)^k`.
pub fn level7_quad_sum(a: usize) -> Result<MultisumSpec> {
    check_a(a, 0, 1)?;
    let linear: [usize; 4] = if a == 0 { [1, 3, 1, 6] } else { [1, 2, 4, 8] };
    MultisumSpec::from_parts(&[1, 2, 2, 8], &QUAD_CROSS, &linear, &[0, 0, 1, 0], &[1, 2, 2, 4])
}

/// Level 7 quadruple sums in the uniform form `(-1)^{k + (1-a)(j+k)}` with
/// linear part `i + (1+a) j + (3+a) k + (6+2a) l`; for `a = 0` this is the
/// stated sum with `j` and `k` swapped.
pub fn level7_quad_sum_uniform(a: usize) -> Result<MultisumSpec> {
    check_a(a, 0, 1)?;
    let sign: [u8; 4] = if a == 0 { [0, 1, 0, 0] } else { [0, 0, 1, 0] };
    MultisumSpec::from_parts(&[1, 2, 2, 8], &QUAD_CROSS, &[1, 1 + a, 3 + a, 6 + 2 * a], &sign, &[1, 2, 2, 4])
}

/// Level 4 double sums; `linear` is one of `(1,1)`, `(1,3)`, `(2,3)`.
pub fn level4_double_sum(linear_i: usize, linear_k: usize) -> Result<MultisumSpec> {
    MultisumSpec::from_parts(&[1, 2], &[(0, 1, 2)], &[linear_i, linear_k], &[0, 1], &[1, 2])
}

pub fn f1(a: usize, b: usize, c: usize) -> Result<MultisumSpec> {
    MultisumSpec::from_parts(&[4, 2, 4], &[(0, 1, 2), (0, 2, 4), (1, 2, 4)], &[a, b, c], &[0, 0, 1], &[1, 2, 4])
}

pub fn f2(a: usize, b: usize, c: usize) -> Result<MultisumSpec> {
    MultisumSpec::from_parts(&[1, 2, 16], &[(0, 1, 2), (0, 2, 4), (1, 2, 4)], &[a, b, c], &[0, 1, 0], &[1, 2, 4])
}

pub fn f3(a: usize, b: usize, c: usize, d: usize) -> Result<MultisumSpec> {
    MultisumSpec::from_parts(
        &[2, 4, 2, 16],
        &[(0, 1, 2), (0, 2, 2), (0, 3, 4), (1, 2, 4), (1, 3, 8), (2, 3, 4)],
        &[a, b, c, d],
        &[0, 0, 1, 0],
        &[1, 2, 2, 4],
    )
}

/// Double-sum forms of `f_1(x,q)` and `f_2(x,q)`, the length generating
/// functions of the Capparelli partitions.
pub fn capparelli_double_sum(a: usize) -> Result<MultisumSpec> {
    check_a(a, 1, 2)?;
    let base = MultisumSpec::from_parts(&[4, 12], &[(0, 1, 6)], &[a + 1, 3 * a + 3], &[], &[1, 3])?
        .with_x_weight(&[1, 2])?;
    if a == 1 {
        Ok(base)
    } else {
        base.with_tail(Tail {
            x_power: 1,
            constant: 1,
            coeffs: vec![2, 3],
        })
    }
}

/// The second double-sum form of `f_2(x,q)`, with tail `(1 + x q^{1+3i+6j})`.
pub fn capparelli_double_sum_alt() -> Result<MultisumSpec> {
    MultisumSpec::from_parts(&[4, 12], &[(0, 1, 6)], &[3, 6], &[], &[1, 3])?
        .with_x_weight(&[1, 2])?
        .with_tail(Tail {
            x_power: 1,
            constant: 1,
            coeffs: vec![3, 6],
        })
}

/// Triple-sum form of `f_a(x,q)` with x-weights `(1, 1, 2)`.
pub fn capparelli_triple_sum(a: usize) -> Result<MultisumSpec> {
    check_a(a, 1, 2)?;
    MultisumSpec::from_parts(&[5, 5, 12], &[(0, 1, 3), (0, 2, 6), (1, 2, 6)], &[3 - a, 2 + a, 6], &[], &[2, 2, 3])?
        .with_x_weight(&[1, 1, 2])
}

/// `sum_{i,j} q^{binom(i,2)} x^{i+2j} / ((q;q)_i (q^2;q^2)_j)`, whose `x^M`
/// coefficient is the constrained sum over `i + 2j = M`.
pub fn halving_family() -> Result<MultisumSpec> {
    MultisumSpec::from_parts_weighted(&[1, 0], &[], &[0, 0], &[], &[1, 2], Some(&[1, 2]))
}

/// Generating families of the four finite summation lemmas: the `x^M`
/// coefficient is the constrained sum over `i + j = M` (parts 1, 2, 4) or
/// `i + j + 2k = M` (part 3).
pub fn lemma_family(part: usize) -> Result<MultisumSpec> {
    match part {
        1 => MultisumSpec::from_parts_weighted(&[0, 0], &[], &[0, 1], &[], &[2, 2], Some(&[1, 1])),
        2 => MultisumSpec::from_parts_weighted(&[0, 2], &[], &[0, 1], &[0, 1], &[2, 2], Some(&[1, 1])),
        3 => MultisumSpec::from_parts_weighted(&[0, 0, 0], &[(0, 1, 1)], &[0, 1, 1], &[0, 1, 0], &[1, 1, 2], Some(&[1, 1, 2])),
        4 => MultisumSpec::from_parts_weighted(&[0, 3], &[(0, 1, 1)], &[0, 2], &[0, 1], &[1, 1], Some(&[1, 1])),
        _ => Err(Error::InvalidSpec(format!("lemma part must be 1..=4, got {part}"))),
    }
}

/// The Slater-list single sums by their list number.
pub fn slater_sum(number: usize) -> Result<SlaterSum> {
    Ok(match number {
        39 => SlaterSum::new(2, 0, 0),
        38 => SlaterSum::new(2, 2, 1),
        99 => SlaterSum::new(1, 1, 0),
        94 => SlaterSum::new(1, 1, 1),
        79 => SlaterSum::new(1, 0, 0),
        96 => SlaterSum::new(1, 2, 1),
        _ => return Err(Error::InvalidSpec(format!("no Slater sum numbered {number}"))),
    })
}

fn check_a(a: usize, lo: usize, hi: usize) -> Result<()> {
    if (lo..=hi).contains(&a) {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!("parameter a must be in {lo}..={hi}, got {a}")))
    }
}
