//! Integral representations of `Z_p` on lattices: the possible decompositions
//! on E8, extraction of `(r, s, t)` from a group element, and lifting of
//! quotient summands.
//!
//! A decomposition `(r, s, t)` stands for `Z[Z_p]^r ⊕ Z[μ_p]^s ⊕ Z^t`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::cyclotomic_polynomial;
use crate::e8::{enumerate_roots, find_subsystem, Dynkin, Isometry, ReflectionWord, RootSystemType};
use crate::matrix::Matrix;
use crate::zlattice::{abs_det, from_columns, image_basis, integer_kernel, solve_integer, IntMatrix};
use crate::ZPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("prime {0} is not supported here")]
    UnsupportedPrime(u32),
    #[error("the action does not have order {0}")]
    OrderMismatch(u32),
    #[error("invariants give a non-integral decomposition (rank {rank}, fixed rank {fixed}, index exponent {t})")]
    Inconsistent { rank: usize, fixed: usize, t: u32 },
    #[error("characteristic polynomial {found} does not match the decomposition {expected}")]
    CharpolyMismatch { expected: String, found: String },
    #[error("sublattice is not invariant under the action")]
    NotInvariant,
    #[error("quotient by the sublattice has torsion")]
    TorsionQuotient,
    #[error("generator does not span a summand of the stated type in the quotient")]
    WrongQuotientType,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RepDecomp {
    pub p: u32,
    pub r: u32,
    pub s: u32,
    pub t: u32,
}

impl RepDecomp {
    pub fn new(p: u32, r: u32, s: u32, t: u32) -> Self {
        RepDecomp { p, r, s, t }
    }

    pub fn rank(&self) -> u32 {
        self.p * self.r + (self.p - 1) * self.s + self.t
    }

    /// Trace of a generator.
    pub fn trace(&self) -> i64 {
        i64::from(self.t) - i64::from(self.s)
    }

    pub fn fixed_rank(&self) -> u32 {
        self.r + self.t
    }

    pub fn is_trivial(&self) -> bool {
        self.r == 0 && self.s == 0
    }

    /// `(x^p − 1)^r · Φ_p(x)^s · (x − 1)^t`.
    pub fn charpoly(&self) -> ZPoly {
        let phi = ZPoly::new(cyclotomic_polynomial(self.p));
        let reg = ZPoly::binomial(self.p as usize, 1);
        let triv = ZPoly::binomial(1, 1);
        &(&reg.pow(self.r) * &phi.pow(self.s)) * &triv.pow(self.t)
    }
}

impl fmt::Display for RepDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r,s,t)=({},{},{}) mod {}", self.r, self.s, self.t, self.p)
    }
}

/// Nontrivial `Z_p`-representations that can occur on E8: `pr + (p−1)s + t = 8`,
/// `s` even, and when `r = 0` one of `s`, `t` vanishes since E8 does not split.
pub fn e8_census(p: u32) -> Result<Vec<RepDecomp>, RepError> {
    if ![3, 5, 7].contains(&p) {
        return Err(RepError::UnsupportedPrime(p));
    }
    let mut out = Vec::new();
    for r in 0..=8 / p {
        for s in (0..=(8 - p * r) / (p - 1)).step_by(2) {
            let t = 8 - p * r - (p - 1) * s;
            let d = RepDecomp::new(p, r, s, t);
            if d.is_trivial() || (r == 0 && s > 0 && t > 0) {
                continue;
            }
            out.push(d);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

fn int_identity(n: usize) -> IntMatrix {
    IntMatrix::identity(n)
}

/// Decomposes the action of an integer matrix of order `p`.
///
/// `r + t` is the rank of the fixed lattice `L^G`, and `t` is read off from
/// the index `[L^G : N·L] = p^t` where `N = 1 + g + … + g^{p−1}`; each
/// summand type contributes `1`, `1` and `p` to that index respectively.
pub fn decompose_matrix(a: &IntMatrix, p: u32) -> Result<RepDecomp, RepError> {
    let n = a.rows();
    let id = int_identity(n);
    if a == &id || a.pow(p) != id {
        return Err(RepError::OrderMismatch(p));
    }
    let fixed = integer_kernel(&(a - &id));
    let norm = (0..p).fold(IntMatrix::zeros(n, n), |acc, k| &acc + &a.pow(k));
    let image = image_basis(&norm);
    let k = from_columns(&fixed, n);
    let coords: Vec<Vec<i64>> = image
        .iter()
        .map(|v| solve_integer(&k, v).expect("norm image lies in the fixed lattice"))
        .collect();
    let index = if fixed.is_empty() { 1 } else { abs_det(&from_columns(&coords, fixed.len())) };
    let mut t = 0u32;
    let mut m = index;
    while m > 1 && m % u64::from(p) == 0 {
        m /= u64::from(p);
        t += 1;
    }
    let inconsistent = RepError::Inconsistent { rank: n, fixed: fixed.len(), t };
    if m != 1 || t as usize > fixed.len() {
        return Err(inconsistent);
    }
    let r = fixed.len() as u32 - t;
    let rest = n as i64 - i64::from(p * r) - i64::from(t);
    if rest < 0 || rest % i64::from(p - 1) != 0 {
        return Err(inconsistent);
    }
    let d = RepDecomp::new(p, r, (rest / i64::from(p - 1)) as u32, t);
    let found = a.charpoly();
    if found != d.charpoly() {
        return Err(RepError::CharpolyMismatch { expected: d.charpoly().to_string(), found: found.to_string() });
    }
    Ok(d)
}

/// Decomposes an isometry of E8 through its matrix in the basis `f₁…f₈`.
pub fn decompose<I: Isometry + ?Sized>(g: &I, p: u32) -> Result<RepDecomp, RepError> {
    decompose_matrix(&g.basis_matrix(), p)
}

/// A Coxeter element of a root subsystem `A_{p−1}^m ⊂ E8`; it has order `p`.
pub fn coxeter_witness(p: u32, m: usize) -> Option<ReflectionWord> {
    let ty = RootSystemType::new(vec![Dynkin::A((p - 1) as u8); m]);
    find_subsystem(enumerate_roots(), &ty).map(ReflectionWord)
}

/// Elements of `Aut(E8)` realizing each decomposition reachable from Coxeter
/// elements of `A_{p−1}^m`, with the decomposition they produce.
pub fn realizations(p: u32) -> Result<Vec<(RepDecomp, ReflectionWord)>, RepError> {
    if ![3, 5, 7].contains(&p) {
        return Err(RepError::UnsupportedPrime(p));
    }
    let mut out = Vec::new();
    for m in 1..=(8 / (p as usize - 1)) {
        if let Some(w) = coxeter_witness(p, m) {
            out.push((decompose(&w, p)?, w));
        }
    }
    Ok(out)
}

/// Type of a summand of the quotient representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SummandType {
    Trivial,
    Cyclotomic,
    Regular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lift {
    /// A preimage of the quotient generator spanning a summand of the same type.
    Lifted(Vec<i64>),
    NoLift,
}

fn saturation_ok(sub: &IntMatrix) -> bool {
    let perp = integer_kernel(&sub.transpose());
    let n = sub.rows();
    let sat = if perp.is_empty() {
        (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
    } else {
        integer_kernel(&from_columns(&perp, n).transpose())
    };
    sat.iter().all(|v| solve_integer(sub, v).is_some())
}

/// Tries to lift the quotient summand generated by the image of `generator`
/// in `L / S` to a summand of `L` of the same type. `sub` lists a basis of the
/// invariant sublattice `S`; `p` is the order of the action.
pub fn lift_summand(
    action: &IntMatrix,
    sub: &[Vec<i64>],
    generator: &[i64],
    kind: SummandType,
    p: u32,
) -> Result<Lift, RepError> {
    let n = action.rows();
    let s = from_columns(sub, n);
    if !sub.is_empty() {
        if sub.iter().any(|v| solve_integer(&s, &action.mul_vec(v)).is_none()) {
            return Err(RepError::NotInvariant);
        }
        if !saturation_ok(&s) {
            return Err(RepError::TorsionQuotient);
        }
    }
    let in_sub = |v: &[i64]| v.iter().all(|&x| x == 0) || (!sub.is_empty() && solve_integer(&s, v).is_some());
    let op = match kind {
        SummandType::Regular => return Ok(Lift::Lifted(generator.to_vec())),
        SummandType::Trivial => action - &int_identity(n),
        SummandType::Cyclotomic => (0..p).fold(IntMatrix::zeros(n, n), |acc, k| &acc + &action.pow(k)),
    };
    let target = op.mul_vec(generator);
    if !in_sub(&target) {
        return Err(RepError::WrongQuotientType);
    }
    if target.iter().all(|&x| x == 0) {
        return Ok(Lift::Lifted(generator.to_vec()));
    }
    // op·(y + S·c) = 0  ⇔  (op·S)·c = −op·y
    let os = &op * &s;
    let rhs: Vec<i64> = target.iter().map(|x| -x).collect();
    Ok(match solve_integer(&os, &rhs) {
        Some(c) => {
            let shift = s.mul_vec(&c);
            Lift::Lifted(generator.iter().zip(&shift).map(|(a, b)| a + b).collect())
        }
        None => Lift::NoLift,
    })
}

/// Integer matrix from rows.
pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgnperm::SignedPerm;

    #[test]
    fn census_lists() {
        let c7 = e8_census(7).unwrap();
        assert_eq!(c7, vec![RepDecomp::new(7, 1, 0, 1)]);
        let c5 = e8_census(5).unwrap();
        assert_eq!(c5, vec![RepDecomp::new(5, 1, 0, 3), RepDecomp::new(5, 0, 2, 0)]);
        let c3 = e8_census(3).unwrap();
        assert_eq!(c3.len(), 4);
        assert!(c3.iter().all(|d| d.rank() == 8));
        assert!(e8_census(11).is_err());
    }

    #[test]
    fn cycles_decompose() {
        let d = decompose(&SignedPerm::standard_cycle(5), 5).unwrap();
        assert_eq!(d, RepDecomp::new(5, 1, 0, 3));
        let d = decompose(&SignedPerm::standard_cycle(7), 7).unwrap();
        assert_eq!(d, RepDecomp::new(7, 1, 0, 1));
        assert_eq!(decompose(&SignedPerm::IDENTITY, 3), Err(RepError::OrderMismatch(3)));
    }

    #[test]
    fn swap_with_shear() {
        // e1 ↔ e2 and e3 ↦ e3 + e1 − e2: the quotient by ⟨e1, e2⟩ is trivial
        let a = int_matrix(&[&[0, 1, 1], &[1, 0, -1], &[0, 0, 1]]);
        let lift = lift_summand(&a, &[vec![1, 0, 0], vec![0, 1, 0]], &[0, 0, 1], SummandType::Trivial, 2).unwrap();
        let Lift::Lifted(v) = lift else { panic!("expected a lift") };
        assert_eq!(a.mul_vec(&v), v);
        assert_eq!(v[2], 1);
    }
}
