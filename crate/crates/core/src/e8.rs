//! The E8 lattice in its positive-definite model.
//!
//! Vectors are stored in doubled coordinates: `d_i = 2·x_i`, so lattice
//! vectors have all `d_i` of one parity and `Σ d_i ≡ 0 (mod 4)`. The 240 roots
//! are `±e_i ± e_j` and `½Σ ε_i e_i` with `Π ε_i = 1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use thiserror::Error;

use crate::matrix::Matrix;
use crate::zlattice::IntMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum E8Error {
    #[error("coordinates {0:?} do not lie in E8")]
    NotInLattice([i32; 8]),
    #[error("vector {0} has norm {1}, not 2")]
    NotARoot(LatticeVec, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVec {
    d: [i32; 8],
}

impl LatticeVec {
    pub fn from_doubled(d: [i32; 8]) -> Result<Self, E8Error> {
        let parity = d[0].rem_euclid(2);
        let same_parity = d.iter().all(|x| x.rem_euclid(2) == parity);
        let sum: i32 = d.iter().sum();
        if same_parity && sum.rem_euclid(4) == 0 {
            Ok(LatticeVec { d })
        } else {
            Err(E8Error::NotInLattice(d))
        }
    }

    pub const ZERO: LatticeVec = LatticeVec { d: [0; 8] };

    /// `s_i·e_i + s_j·e_j` (indices 0-based, signs ±1).
    pub fn pair(i: usize, si: i32, j: usize, sj: i32) -> Self {
        assert!(i != j && i < 8 && j < 8);
        let mut d = [0; 8];
        d[i] = 2 * si;
        d[j] = 2 * sj;
        LatticeVec { d }
    }

    /// `½ Σ ε_i e_i`.
    pub fn half(eps: [i32; 8]) -> Result<Self, E8Error> {
        Self::from_doubled(eps)
    }

    /// `2e_i`, the smallest lattice multiple of a coordinate vector.
    pub fn twice_unit(i: usize) -> Self {
        let mut d = [0; 8];
        d[i] = 4;
        LatticeVec { d }
    }

    pub fn doubled(&self) -> [i32; 8] {
        self.d
    }

    pub fn norm(&self) -> i64 {
        inner(self, self)
    }

    pub fn scale(&self, k: i32) -> Self {
        LatticeVec { d: self.d.map(|x| x * k) }
    }

    pub(crate) fn from_raw(d: [i32; 8]) -> Self {
        debug_assert!(Self::from_doubled(d).is_ok());
        LatticeVec { d }
    }
}

/// The Euclidean pairing; integral on E8.
pub fn inner(u: &LatticeVec, v: &LatticeVec) -> i64 {
    let s: i64 = u.d.iter().zip(&v.d).map(|(a, b)| i64::from(*a) * i64::from(*b)).sum();
    debug_assert_eq!(s % 4, 0);
    s / 4
}

impl Add for LatticeVec {
    type Output = LatticeVec;
    fn add(self, o: LatticeVec) -> LatticeVec {
        LatticeVec { d: std::array::from_fn(|i| self.d[i] + o.d[i]) }
    }
}

impl Sub for LatticeVec {
    type Output = LatticeVec;
    fn sub(self, o: LatticeVec) -> LatticeVec {
        LatticeVec { d: std::array::from_fn(|i| self.d[i] - o.d[i]) }
    }
}

impl Neg for LatticeVec {
    type Output = LatticeVec;
    fn neg(self) -> LatticeVec {
        LatticeVec { d: self.d.map(|x| -x) }
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let odd = self.d[0] % 2 != 0;
        let parts: Vec<String> = self
            .d
            .iter()
            .map(|&x| if odd { format!("{x}/2") } else { (x / 2).to_string() })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A lattice vector of norm 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(LatticeVec);

impl Root {
    pub fn new(v: LatticeVec) -> Result<Self, E8Error> {
        match v.norm() {
            2 => Ok(Root(v)),
            n => Err(E8Error::NotARoot(v, n)),
        }
    }

    pub fn vec(&self) -> &LatticeVec {
        &self.0
    }
}

impl std::ops::Deref for Root {
    type Target = LatticeVec;
    fn deref(&self) -> &LatticeVec {
        &self.0
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(-self.0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All 240 roots, in a fixed order.
pub fn enumerate_roots() -> &'static [Root] {
    static ROOTS: OnceLock<Vec<Root>> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let mut out = Vec::with_capacity(240);
        for i in 0..8 {
            for j in i + 1..8 {
                for si in [1, -1] {
                    for sj in [1, -1] {
                        out.push(Root(LatticeVec::pair(i, si, j, sj)));
                    }
                }
            }
        }
        for mask in 0u32..256 {
            if mask.count_ones() % 2 == 1 {
                continue;
            }
            let eps: [i32; 8] = std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
            out.push(Root(LatticeVec { d: eps }));
        }
        out
    })
}

pub fn is_root(v: &LatticeVec) -> bool {
    v.norm() == 2
}

/// `w_r(x) = x − (r, x)·r`.
pub fn reflect(r: &Root, x: &LatticeVec) -> LatticeVec {
    let k = inner(r, x) as i32;
    *x - r.scale(k)
}

/// Something acting linearly and isometrically on E8.
pub trait Isometry {
    fn apply(&self, x: &LatticeVec) -> LatticeVec;

    /// Trace of the action on `R⁸`.
    fn trace(&self) -> i64 {
        (0..8)
            .map(|i| {
                let img = self.apply(&LatticeVec::twice_unit(i));
                i64::from(img.d[i]) / 4
            })
            .sum()
    }

    fn is_involution(&self) -> bool {
        basis()
            .f
            .iter()
            .all(|f| self.apply(&self.apply(f)) == **f)
    }

    fn is_identity(&self) -> bool {
        basis().f.iter().all(|f| self.apply(f) == **f)
    }

    fn is_minus_identity(&self) -> bool {
        basis().f.iter().all(|f| self.apply(f) == -**f)
    }

    /// Matrix in the basis `f₁…f₈` (columns are images of basis vectors).
    fn basis_matrix(&self) -> IntMatrix {
        let cols: Vec<[i64; 8]> = basis().f.iter().map(|f| basis().coords(&self.apply(f))).collect();
        Matrix::from_fn(8, 8, |i, j| cols[j][i])
    }
}

/// A product of reflections `w_{r_1} ∘ … ∘ w_{r_k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReflectionWord(pub Vec<Root>);

impl Isometry for ReflectionWord {
    fn apply(&self, x: &LatticeVec) -> LatticeVec {
        self.0.iter().rev().fold(*x, |acc, r| reflect(r, &acc))
    }
}

/// An isometry given by its matrix in the basis `f₁…f₈`.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisIsometry(pub IntMatrix);

impl Isometry for BasisIsometry {
    fn apply(&self, x: &LatticeVec) -> LatticeVec {
        let c = basis().coords(x);
        let img = self.0.mul_vec(&c);
        basis().from_coords(&img)
    }

    fn basis_matrix(&self) -> IntMatrix {
        self.0.clone()
    }
}

/// Edges of the E8 diagram on `f₁…f₈` (0-based): the chain 1–7 and the branch 5–8.
pub const DIAGRAM_EDGES: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];

/// The standard basis `f₁…f₈` and the auxiliary root `f₇′ = e₇ − e₈`.
pub struct StandardBasis {
    pub f: [Root; 8],
    pub f7_prime: Root,
    /// `4·B⁻¹` where `B` has the `f_j` as columns in true coordinates.
    inverse4: [[i64; 8]; 8],
}

impl StandardBasis {
    fn build() -> Self {
        let chain = |i: usize| Root(LatticeVec::pair(i, 1, i + 1, -1));
        let f = [
            chain(0),
            chain(1),
            chain(2),
            chain(3),
            chain(4),
            chain(5),
            Root(LatticeVec::pair(6, 1, 7, 1)),
            Root(LatticeVec { d: [-1, -1, -1, -1, -1, 1, 1, -1] }),
        ];
        let f7_prime = Root(LatticeVec::pair(6, 1, 7, -1));
        let b = Matrix::<crate::Rational>::from_fn(8, 8, |i, j| {
            crate::Rational::new(f[j].d[i].into(), 2.into())
        });
        let inv = b.inverse().expect("basis is invertible");
        let inverse4 = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let x = &inv[(i, j)] * crate::Rational::from_integer(4.into());
                assert!(x.is_integer());
                i64::try_from(x.to_integer()).expect("small entry")
            })
        });
        StandardBasis { f, f7_prime, inverse4 }
    }

    /// Integer coordinates of a lattice vector in the basis `f₁…f₈`.
    pub fn coords(&self, v: &LatticeVec) -> [i64; 8] {
        // c = B⁻¹·x = (4B⁻¹)·d / 8
        std::array::from_fn(|i| {
            let s: i64 = (0..8).map(|j| self.inverse4[i][j] * i64::from(v.d[j])).sum();
            assert_eq!(s % 8, 0, "vector {v} is not in the lattice spanned by the basis");
            s / 8
        })
    }

    pub fn from_coords(&self, c: &[i64]) -> LatticeVec {
        let d: [i32; 8] = std::array::from_fn(|i| {
            let s: i64 = (0..8).map(|j| c[j] * i64::from(self.f[j].d[i])).sum();
            i32::try_from(s).expect("coordinate overflow")
        });
        LatticeVec::from_raw(d)
    }

    /// Gram matrix `(f_i, f_j)` in the positive model.
    pub fn gram(&self) -> IntMatrix {
        Matrix::from_fn(8, 8, |i, j| inner(&self.f[i], &self.f[j]))
    }
}

pub fn basis() -> &'static StandardBasis {
    static B: OnceLock<StandardBasis> = OnceLock::new();
    B.get_or_init(StandardBasis::build)
}

/// Irreducible finite root system types of simply-laced Dynkin diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dynkin {
    A(u8),
    D(u8),
    E(u8),
}

impl Dynkin {
    pub fn rank(&self) -> usize {
        match *self {
            Dynkin::A(n) | Dynkin::D(n) | Dynkin::E(n) => n as usize,
        }
    }

    /// Edges on nodes `0..rank`, listed so that a breadth-first order is `0, 1, 2, …`.
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        match *self {
            Dynkin::A(_) => (1..n).map(|i| (i - 1, i)).collect(),
            Dynkin::D(_) => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Dynkin::E(_) => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((2, n - 1));
                e
            }
        }
    }
}

impl fmt::Display for Dynkin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dynkin::A(n) => write!(f, "A{n}"),
            Dynkin::D(n) => write!(f, "D{n}"),
            Dynkin::E(n) => write!(f, "E{n}"),
        }
    }
}

/// A direct sum of irreducible types, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemType(Vec<Dynkin>);

impl RootSystemType {
    pub fn new(mut parts: Vec<Dynkin>) -> Self {
        parts.sort();
        RootSystemType(parts)
    }

    pub fn parts(&self) -> &[Dynkin] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(Dynkin::rank).sum()
    }

    fn nodes_and_edges(&self) -> (usize, Vec<(usize, usize)>) {
        let mut offset = 0;
        let mut edges = Vec::new();
        for d in &self.0 {
            edges.extend(d.edges().into_iter().map(|(a, b)| (a + offset, b + offset)));
            offset += d.rank();
        }
        (offset, edges)
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("none");
        }
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&s.join("+"))
    }
}

/// The type of a set of roots forming a simple system (pairwise pairings in
/// `{0, ±1}` with an ADE forest as the nonzero pattern), or `None`.
pub fn root_subsystem_type(roots: &[Root]) -> Option<RootSystemType> {
    let n = roots.len();
    let mut adj = vec![Vec::new(); n];
    let mut edges = 0;
    for i in 0..n {
        for j in i + 1..n {
            match inner(&roots[i], &roots[j]) {
                0 => {}
                1 | -1 => {
                    adj[i].push(j);
                    adj[j].push(i);
                    edges += 1;
                }
                _ => return None,
            }
        }
    }
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    let mut components = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            for &m in &adj[comp[k]] {
                if !seen[m] {
                    seen[m] = true;
                    comp.push(m);
                }
            }
            k += 1;
        }
        parts.push(classify_tree(&comp, &adj)?);
    }
    if edges + components != n {
        return None;
    }
    Some(RootSystemType::new(parts))
}

fn classify_tree(comp: &[usize], adj: &[Vec<usize>]) -> Option<Dynkin> {
    let n = comp.len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => u8::try_from(n).ok().map(Dynkin::A),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*c, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        if adj[cur].len() > 2 {
                            return usize::MAX;
                        }
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort();
            let r = u8::try_from(n).ok()?;
            match arms.as_slice() {
                [1, 1, _] => Some(Dynkin::D(r)),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(Dynkin::E(r)),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Searches `pool` for a simple system of the requested type (pairings `−1`
/// along diagram edges, `0` otherwise). Exhaustive backtracking.
pub fn find_subsystem(pool: &[Root], ty: &RootSystemType) -> Option<Vec<Root>> {
    let (n, edges) = ty.nodes_and_edges();
    let span = Matrix::<crate::Rational>::from_fn(pool.len(), 8, |i, j| {
        crate::Rational::from_integer(pool[i].d[j].into())
    });
    if n > span.rank() {
        return None;
    }
    let adjacent = |a: usize, b: usize| edges.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
    let mut chosen: Vec<Root> = Vec::with_capacity(n);
    fn go(
        k: usize,
        n: usize,
        pool: &[Root],
        chosen: &mut Vec<Root>,
        adjacent: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if k == n {
            return true;
        }
        for r in pool {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(j, c)| inner(r, c) == if adjacent(j, k) { -1 } else { 0 });
            if ok {
                chosen.push(*r);
                if go(k + 1, n, pool, chosen, adjacent) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if go(0, n, pool, &mut chosen, &adjacent) {
        Some(chosen)
    } else {
        None
    }
}

pub fn contains_subsystem(pool: &[Root], ty: &RootSystemType) -> bool {
    find_subsystem(pool, ty).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, si: i32, j: usize, sj: i32) -> LatticeVec {
        LatticeVec::pair(i, si, j, sj)
    }

    #[test]
    fn membership() {
        assert!(LatticeVec::from_doubled([2, 0, 0, 0, 0, 0, 0, 0]).is_err());
        assert!(LatticeVec::from_doubled([1; 8]).is_ok());
        assert!(LatticeVec::from_doubled([1, 1, 1, 1, 1, 1, 1, -1]).is_err());
        assert_eq!(LatticeVec::twice_unit(3).norm(), 4);
    }

    #[test]
    fn root_count_and_shape() {
        let roots = enumerate_roots();
        assert_eq!(roots.len(), 240);
        assert!(roots.iter().all(|r| r.norm() == 2));
        let set: std::collections::HashSet<_> = roots.iter().collect();
        assert_eq!(set.len(), 240);
        assert!(roots.iter().all(|r| set.contains(&-*r)));
        assert!(set.contains(&Root::new(LatticeVec::half([1; 8]).unwrap()).unwrap()));
    }

    #[test]
    fn reflections() {
        let b = basis();
        let (f1, f2) = (b.f[0], b.f[1]);
        assert_eq!(reflect(&f1, &f1), -*f1);
        assert_eq!(reflect(&f1, &f2), *f2 + *f1);
        assert_eq!(inner(&reflect(&f1, &f2), &f2), 1);
        let x = e(4, 1, 5, 1);
        assert_eq!(reflect(&f1, &x), x);
    }

    #[test]
    fn standard_basis_gram() {
        let b = basis();
        assert_eq!(*b.f[6], e(6, 1, 7, 1));
        assert_eq!(*b.f7_prime, e(6, 1, 7, -1));
        assert_eq!(inner(&b.f[7], &b.f[7]), 2);
        let g = b.gram();
        for i in 0..8 {
            for j in 0..8 {
                let want = if i == j {
                    2
                } else if DIAGRAM_EDGES.contains(&(i.min(j), i.max(j))) {
                    -1
                } else {
                    0
                };
                assert_eq!(g[(i, j)], want, "({i},{j})");
            }
        }
        assert_eq!(crate::zlattice::abs_det(&g), 1);
    }

    #[test]
    fn basis_coordinates_round_trip() {
        let b = basis();
        for r in enumerate_roots() {
            let c = b.coords(r);
            assert_eq!(b.from_coords(&c), **r);
        }
    }

    #[test]
    fn classify_simple_systems() {
        let b = basis();
        assert_eq!(root_subsystem_type(&[b.f[0]]).unwrap().to_string(), "A1");
        assert_eq!(root_subsystem_type(&b.f).unwrap().to_string(), "E8");
        assert_eq!(root_subsystem_type(&b.f[..4]).unwrap().to_string(), "A4");
        let d4 = [b.f[3], b.f[4], b.f[5], b.f[7]];
        assert_eq!(root_subsystem_type(&d4).unwrap().to_string(), "D4");
        let two = [b.f[0], b.f[1], b.f[3], b.f[4]];
        assert_eq!(root_subsystem_type(&two).unwrap().to_string(), "A2+A2");
        assert!(root_subsystem_type(&[b.f[0], -b.f[0]]).is_none());
    }

    #[test]
    fn search_inside_e8() {
        let all = enumerate_roots();
        for ty in [
            vec![Dynkin::E(8)],
            vec![Dynkin::A(4), Dynkin::A(4)],
            vec![Dynkin::A(2); 4],
            vec![Dynkin::D(8)],
            vec![Dynkin::A(8)],
        ] {
            let t = RootSystemType::new(ty);
            let found = find_subsystem(all, &t).unwrap_or_else(|| panic!("{t} missing"));
            assert_eq!(root_subsystem_type(&found).unwrap(), t);
        }
        assert!(find_subsystem(all, &RootSystemType::new(vec![Dynkin::A(1); 9])).is_none());
    }

    #[test]
    fn reflection_word_trace() {
        let b = basis();
        let w = ReflectionWord(vec![b.f[0]]);
        assert_eq!(w.trace(), 6);
        assert!(w.is_involution());
        let m = BasisIsometry(w.basis_matrix());
        for r in enumerate_roots().iter().take(50) {
            assert_eq!(m.apply(r), w.apply(r));
        }
    }
}
