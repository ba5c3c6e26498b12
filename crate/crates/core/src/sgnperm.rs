//! The signed-permutation subgroup `H = H₀ ⋊ S₈` of `Aut(E8)`.
//!
//! An element `(ε)σ` sends `e_i` to `ε_{σ(i)}·e_{σ(i)}`, with `Π ε_i = 1`.
//! Indices are 0-based throughout; `Display` prints cycles 1-based.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::e8::{enumerate_roots, inner, Isometry, LatticeVec, Root};
use crate::{Rational, ZPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SgnError {
    #[error("{0:?} is not a permutation of 0..8")]
    NotAPermutation([u8; 8]),
    #[error("sign vector {0:?} has product -1")]
    OddSigns([i8; 8]),
    #[error("element is not an involution")]
    NotAnInvolution,
    #[error("element is ±1")]
    Central,
    #[error("element has order {0}, expected 4")]
    NotOrderFour(u32),
    #[error("square of the element is not in class 4A'")]
    SquareNotFourAPrime,
    #[error("order-4 element {0} has neither of the two admissible shapes")]
    UnexpectedShape(SignedPerm),
    #[error("search needs {needed} group elements but the budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
}

/// `(ε)σ` with `g(e_i) = ε_{σ(i)}·e_{σ(i)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    eps: [i8; 8],
    perm: [u8; 8],
}

/// `|H| = 2⁷·8!`.
pub const H_ORDER: u64 = 128 * 40320;

impl SignedPerm {
    pub const IDENTITY: SignedPerm = SignedPerm { eps: [1; 8], perm: [0, 1, 2, 3, 4, 5, 6, 7] };

    pub fn new(eps: [i8; 8], perm: [u8; 8]) -> Result<Self, SgnError> {
        let mut seen = [false; 8];
        for &x in &perm {
            if x >= 8 || seen[x as usize] {
                return Err(SgnError::NotAPermutation(perm));
            }
            seen[x as usize] = true;
        }
        if eps.iter().any(|&e| e != 1 && e != -1) || eps.iter().map(|&e| i32::from(e)).product::<i32>() != 1 {
            return Err(SgnError::OddSigns(eps));
        }
        Ok(SignedPerm { eps, perm })
    }

    pub fn diag(eps: [i8; 8]) -> Result<Self, SgnError> {
        Self::new(eps, Self::IDENTITY.perm)
    }

    /// Permutation from disjoint cycles (0-based), with signs.
    pub fn from_cycles(cycles: &[&[u8]], eps: [i8; 8]) -> Result<Self, SgnError> {
        let mut perm = Self::IDENTITY.perm;
        for c in cycles {
            for (k, &i) in c.iter().enumerate() {
                perm[i as usize] = c[(k + 1) % c.len()];
            }
        }
        Self::new(eps, perm)
    }

    /// The positive cycle `e₁ → e₂ → … → e_n → e₁`.
    pub fn standard_cycle(n: u8) -> Self {
        let c: Vec<u8> = (0..n).collect();
        Self::from_cycles(&[&c], [1; 8]).expect("valid cycle")
    }

    pub fn eps(&self) -> [i8; 8] {
        self.eps
    }

    pub fn perm(&self) -> [u8; 8] {
        self.perm
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let perm = std::array::from_fn(|i| self.perm[other.perm[i] as usize]);
        let inv = self.perm_inverse();
        let eps = std::array::from_fn(|k| self.eps[k] * other.eps[inv[k] as usize]);
        SignedPerm { eps, perm }
    }

    fn perm_inverse(&self) -> [u8; 8] {
        let mut inv = [0u8; 8];
        for (i, &j) in self.perm.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        inv
    }

    pub fn inverse(&self) -> SignedPerm {
        let inv = self.perm_inverse();
        // g⁻¹(e_j) = ε_j·e_{σ⁻¹(j)}, so the sign at target σ⁻¹(j) is ε_j
        let mut eps = [1i8; 8];
        for j in 0..8 {
            eps[inv[j] as usize] = self.eps[j];
        }
        SignedPerm { eps, perm: inv }
    }

    pub fn pow(&self, e: u32) -> SignedPerm {
        (0..e).fold(Self::IDENTITY, |acc, _| acc.compose(self))
    }

    pub fn conjugate_by(&self, h: &SignedPerm) -> SignedPerm {
        h.compose(self).compose(&h.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Cycles of `σ` (0-based), each with the product of its signs.
    pub fn signed_cycles(&self) -> Vec<(Vec<u8>, i8)> {
        let mut seen = [false; 8];
        let mut out = Vec::new();
        for start in 0..8u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut sign = 1i8;
            let mut i = start;
            while !seen[i as usize] {
                seen[i as usize] = true;
                cyc.push(i);
                i = self.perm[i as usize];
                sign *= self.eps[i as usize];
            }
            out.push((cyc, sign));
        }
        out
    }

    /// Sorted cycle lengths of `σ`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.signed_cycles().iter().map(|(c, _)| c.len()).collect();
        t.sort_unstable();
        t
    }

    /// Order: lcm over signed cycles of `L` (sign +1) or `2L` (sign −1).
    pub fn order(&self) -> u32 {
        self.signed_cycles()
            .iter()
            .map(|(c, s)| c.len() as u32 * if *s == 1 { 1 } else { 2 })
            .fold(1, num_integer::lcm)
    }

    pub fn trace(&self) -> i64 {
        (0..8).filter(|&i| self.perm[i] as usize == i).map(|i| i64::from(self.eps[i])).sum()
    }

    /// `Π (x^L − s)` over signed cycles.
    pub fn charpoly(&self) -> ZPoly {
        self.signed_cycles()
            .iter()
            .fold(ZPoly::one(), |acc, (c, s)| &acc * &ZPoly::binomial(c.len(), i64::from(*s)))
    }

    /// Uniform random element of `H`.
    pub fn random(rng: &mut impl Rng) -> SignedPerm {
        let mut perm = Self::IDENTITY.perm;
        perm.shuffle(rng);
        let mut eps: [i8; 8] = std::array::from_fn(|_| if rng.gen::<bool>() { 1 } else { -1 });
        if eps.iter().filter(|&&e| e == -1).count() % 2 == 1 {
            eps[7] = -eps[7];
        }
        SignedPerm { eps, perm }
    }
}

impl Isometry for SignedPerm {
    fn apply(&self, x: &LatticeVec) -> LatticeVec {
        let d = x.doubled();
        let mut out = [0i32; 8];
        for i in 0..8 {
            let j = self.perm[i] as usize;
            out[j] = i32::from(self.eps[j]) * d[i];
        }
        LatticeVec::from_raw(out)
    }

    fn trace(&self) -> i64 {
        SignedPerm::trace(self)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: String = self.eps.iter().map(|&e| if e == 1 { '+' } else { '-' }).collect();
        write!(f, "({signs})")?;
        let cycles: Vec<_> = self.signed_cycles().into_iter().filter(|(c, _)| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("1");
        }
        for (c, _) in cycles {
            let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Every element of `H` in a fixed order, perm-major.
pub fn all_elements() -> impl Iterator<Item = SignedPerm> {
    all_perms().into_iter().flat_map(|perm| even_sign_vectors().map(move |eps| SignedPerm { eps, perm }))
}

fn even_sign_vectors() -> impl Iterator<Item = [i8; 8]> {
    (0u32..256)
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|m| std::array::from_fn(|i| if m >> i & 1 == 1 { -1 } else { 1 }))
}

fn all_perms() -> Vec<[u8; 8]> {
    let mut out = Vec::with_capacity(40320);
    let mut p = SignedPerm::IDENTITY.perm;
    loop {
        out.push(p);
        let Some(i) = (0..7).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..8).rev().find(|&j| p[j] > p[i]).expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

/// Conjugacy classes of involutions of `Aut(E8)` other than `±1`, named by a
/// representative reflection product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum InvolutionClass {
    OneAPrime,
    TwoA,
    ThreeA,
    FourA,
    FourAPrime,
}

impl InvolutionClass {
    pub fn label(&self) -> &'static str {
        match self {
            InvolutionClass::OneAPrime => "1A'",
            InvolutionClass::TwoA => "2A",
            InvolutionClass::ThreeA => "3A",
            InvolutionClass::FourA => "4A",
            InvolutionClass::FourAPrime => "4A'",
        }
    }
}

impl fmt::Display for InvolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvolutionReport {
    pub class: InvolutionClass,
    /// Number of `−1` eigenvalues after normalizing by `v ↦ −v`.
    pub length: u32,
    pub negated: bool,
    /// A root with odd `(v(r), r)`, when the length is 4 and one exists.
    pub odd_witness: Option<(Root, i64)>,
}

fn odd_pairing_root<I: Isometry + ?Sized>(v: &I) -> Option<(Root, i64)> {
    let b = crate::e8::basis();
    b.f.iter()
        .chain(enumerate_roots())
        .map(|r| (*r, inner(&v.apply(r), r)))
        .find(|(_, k)| k.rem_euclid(2) == 1)
}

pub fn involution_class<I: Isometry + ?Sized>(v: &I) -> Result<InvolutionReport, SgnError> {
    if !v.is_involution() {
        return Err(SgnError::NotAnInvolution);
    }
    if v.is_identity() || v.is_minus_identity() {
        return Err(SgnError::Central);
    }
    let l = ((8 - v.trace()) / 2) as u32;
    let (length, negated) = if l > 4 { (8 - l, true) } else { (l, false) };
    let (class, odd_witness) = match length {
        1 => (InvolutionClass::OneAPrime, None),
        2 => (InvolutionClass::TwoA, None),
        3 => (InvolutionClass::ThreeA, None),
        _ => match odd_pairing_root(v) {
            Some(w) => (InvolutionClass::FourA, Some(w)),
            None => (InvolutionClass::FourAPrime, None),
        },
    };
    Ok(InvolutionReport { class, length, negated, odd_witness })
}

fn is_four_a_prime(v: &SignedPerm) -> bool {
    matches!(involution_class(v), Ok(r) if r.class == InvolutionClass::FourAPrime)
}

/// The two admissible shapes of an order-4 element whose square is in 4A′.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Order4Case {
    /// `σ² = 1` with this many transpositions (2, 3 or 4).
    Transpositions(u8),
    /// `σ` is two disjoint 4-cycles.
    TwoFourCycles,
}

impl fmt::Display for Order4Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order4Case::Transpositions(2) => f.write_str("i:(12)(34)"),
            Order4Case::Transpositions(3) => f.write_str("i:(12)(34)(56)"),
            Order4Case::Transpositions(_) => f.write_str("i:(12)(34)(56)(78)"),
            Order4Case::TwoFourCycles => f.write_str("ii:(1234)(5678)"),
        }
    }
}

pub fn classify_order4(v: &SignedPerm) -> Result<(Order4Case, i64), SgnError> {
    let ord = v.order();
    if ord != 4 {
        return Err(SgnError::NotOrderFour(ord));
    }
    if !is_four_a_prime(&v.compose(v)) {
        return Err(SgnError::SquareNotFourAPrime);
    }
    let case = match v.cycle_type().as_slice() {
        [1, 1, 1, 1, 2, 2] | [1, 1, 2, 2, 2] | [2, 2, 2, 2] => {
            let n = v.cycle_type().iter().filter(|&&l| l == 2).count() as u8;
            Order4Case::Transpositions(n)
        }
        [4, 4] => Order4Case::TwoFourCycles,
        _ => return Err(SgnError::UnexpectedShape(*v)),
    };
    Ok((case, v.trace()))
}

/// Roots fixed by every generator.
pub fn fixed_roots<I: Isometry>(gens: &[I]) -> Vec<Root> {
    enumerate_roots()
        .iter()
        .filter(|r| gens.iter().all(|g| g.apply(r) == ***r))
        .copied()
        .collect()
}

/// `D = diag(−1,−1,−1,−1,1,1,1,1)`.
pub fn rep_diagonal() -> SignedPerm {
    SignedPerm::diag([-1, -1, -1, -1, 1, 1, 1, 1]).expect("even signs")
}

/// `P = (12)(34)(56)(78)` with positive signs.
pub fn rep_transpositions() -> SignedPerm {
    SignedPerm::from_cycles(&[&[0, 1], &[2, 3], &[4, 5], &[6, 7]], [1; 8]).expect("valid")
}

/// All involutions of `H` in class 4A′.
pub fn four_a_prime_involutions() -> Vec<SignedPerm> {
    all_perms()
        .into_iter()
        .filter(|p| (0..8).all(|i| p[p[i] as usize] as usize == i))
        .flat_map(|perm| even_sign_vectors().map(move |eps| SignedPerm { eps, perm }))
        .filter(|g| g.compose(g).is_identity() && is_four_a_prime(g))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Z2FourVerdict {
    /// `(8 + 15·0)/16` for a hypothetical `(Z₂)⁴` with every nontrivial trace 0.
    pub averaged_dimension: String,
    pub averaged_is_integer: bool,
    pub four_a_prime_in_h: usize,
    /// Largest rank of an elementary abelian subgroup of `H` all of whose
    /// nonidentity elements are in 4A′.
    pub max_rank: u32,
    pub rank_two_example: (String, String),
    pub rank_two_average: String,
    pub obstructed: bool,
}

pub fn averaged_fixed_dimension(traces: &[i64]) -> Rational {
    Rational::new(traces.iter().sum::<i64>().into(), (traces.len() as i64).into())
}

/// Elementary abelian 2-subgroups of `H` with every nonidentity element in
/// 4A′. The first generator is fixed to each of the two `H`-class
/// representatives of 4A′ (every 4A′ involution of `H` is conjugate to one).
pub fn search_z2_4_obstruction() -> Z2FourVerdict {
    let pool = four_a_prime_involutions();
    let set: BTreeSet<SignedPerm> = pool.iter().copied().collect();
    let mut max_rank = 0u32;
    for seed in [rep_diagonal(), rep_transpositions()] {
        let mut group = vec![SignedPerm::IDENTITY, seed];
        max_rank = max_rank.max(extend(&pool, &set, &mut group, 1));
    }
    let a = rep_diagonal();
    let b = SignedPerm::diag([-1, -1, 1, 1, -1, -1, 1, 1]).expect("even signs");
    let avg = averaged_fixed_dimension(&[8, a.trace(), b.trace(), a.compose(&b).trace()]);
    let hyp = averaged_fixed_dimension(&std::iter::once(8).chain(std::iter::repeat(0).take(15)).collect::<Vec<_>>());
    Z2FourVerdict {
        averaged_dimension: hyp.to_string(),
        averaged_is_integer: hyp.is_integer(),
        four_a_prime_in_h: pool.len(),
        max_rank,
        rank_two_example: (a.to_string(), b.to_string()),
        rank_two_average: avg.to_string(),
        obstructed: max_rank < 4,
    }
}

fn extend(pool: &[SignedPerm], set: &BTreeSet<SignedPerm>, group: &mut Vec<SignedPerm>, rank: u32) -> u32 {
    let mut best = rank;
    let last = *group.last().expect("nonempty");
    for g in pool.iter().filter(|g| **g > last) {
        if group.contains(g) {
            continue;
        }
        let ok = group.iter().all(|h| h.compose(g) == g.compose(h) && (h.is_identity() || set.contains(&h.compose(g))));
        if !ok {
            continue;
        }
        let mut bigger = group.clone();
        bigger.extend(group.iter().map(|h| h.compose(g)));
        best = best.max(extend(pool, set, &mut bigger, rank + 1));
        if best >= 4 {
            return best;
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Q8Verdict {
    pub scanned: u64,
    /// Number of square roots of each central representative.
    pub square_roots: BTreeMap<String, usize>,
    pub q8_pairs: usize,
    /// Achievable `(tr i, tr j, tr k)` over faithful `Q₈ ⊂ H` with `−1 ↦` 4A′.
    pub triples: BTreeSet<[i64; 3]>,
    pub order4_traces: BTreeSet<i64>,
    pub shapes: BTreeMap<String, usize>,
    /// Third traces seen when the first two are both −4.
    pub branch_minus_four: BTreeSet<i64>,
    /// Third traces seen when the first two are both −2.
    pub branch_minus_two: BTreeSet<i64>,
    /// Pairs of triples summing to `(−4, −4, −4)`.
    pub conflicts: Vec<([i64; 3], [i64; 3])>,
    pub obstructed: bool,
}

/// Scans all of `H` for square roots of the 4A′ representatives, builds every
/// `Q₈` on them, and checks the trace condition for two such images.
pub fn search_q8_obstruction(budget: u64) -> Result<Q8Verdict, SgnError> {
    if budget < H_ORDER {
        return Err(SgnError::BudgetExceeded { needed: H_ORDER, budget });
    }
    let centers = [("D", rep_diagonal()), ("P", rep_transpositions())];
    let mut roots: Vec<Vec<SignedPerm>> = vec![Vec::new(); 2];
    let mut scanned = 0u64;
    for g in all_elements() {
        scanned += 1;
        let sq = g.compose(&g);
        for (k, (_, z)) in centers.iter().enumerate() {
            if sq == *z {
                roots[k].push(g);
            }
        }
    }
    let mut square_roots = BTreeMap::new();
    let mut triples = BTreeSet::new();
    let mut order4_traces = BTreeSet::new();
    let mut shapes = BTreeMap::new();
    let mut q8_pairs = 0;
    for (k, (name, z)) in centers.iter().enumerate() {
        square_roots.insert((*name).to_string(), roots[k].len());
        for g in &roots[k] {
            let (case, tr) = classify_order4(g)?;
            order4_traces.insert(tr);
            *shapes.entry(case.to_string()).or_insert(0) += 1;
        }
        for gi in &roots[k] {
            let gi_inv = gi.compose(z);
            for gj in &roots[k] {
                if gj.compose(gi) == gi_inv.compose(gj) {
                    q8_pairs += 1;
                    triples.insert([gi.trace(), gj.trace(), gi.compose(gj).trace()]);
                }
            }
        }
    }
    let mut conflicts = Vec::new();
    for a in &triples {
        let b = [-4 - a[0], -4 - a[1], -4 - a[2]];
        if triples.contains(&b) {
            conflicts.push((*a, b));
        }
    }
    let branch = |t: i64| triples.iter().filter(|x| x[0] == t && x[1] == t).map(|x| x[2]).collect();
    Ok(Q8Verdict {
        scanned,
        square_roots,
        q8_pairs,
        branch_minus_four: branch(-4),
        branch_minus_two: branch(-2),
        triples,
        order4_traces,
        shapes,
        obstructed: conflicts.is_empty(),
        conflicts,
    })
}

/// Conjugates an element of odd order to its normal form: positive signs and
/// cycles laid out consecutively, longest first. Returns `(h, h·g·h⁻¹)`.
pub fn odd_normal_form(g: &SignedPerm) -> (SignedPerm, SignedPerm) {
    assert!(g.order() % 2 == 1, "element of even order");
    // signs first: pick δ with δ g δ⁻¹ positive along every cycle
    let mut delta = [1i8; 8];
    let mut cycles = g.signed_cycles();
    for (c, _) in &cycles {
        for w in 1..c.len() {
            // (δgδ)(e_{c[w-1]}) has sign δ_{c[w]}·ε_{c[w]}·δ_{c[w-1]}
            let (prev, cur) = (c[w - 1] as usize, c[w] as usize);
            delta[cur] = g.eps[cur] * delta[prev];
        }
    }
    if delta.iter().map(|&d| i32::from(d)).product::<i32>() == -1 {
        // some cycle has odd length; flipping it keeps the signs positive
        let (c, _) = cycles.iter().find(|(c, _)| c.len() % 2 == 1).expect("odd-order element has an odd cycle");
        for &i in c {
            delta[i as usize] = -delta[i as usize];
        }
    }
    let d = SignedPerm::diag(delta).expect("even signs");
    let positive = g.conjugate_by(&d);
    cycles.sort_by_key(|(c, _)| std::cmp::Reverse(c.len()));
    let mut relabel = [0u8; 8];
    let mut next = 0u8;
    for (c, _) in &cycles {
        for &i in c {
            relabel[i as usize] = next;
            next += 1;
        }
    }
    let pi = SignedPerm { eps: [1; 8], perm: relabel };
    let h = pi.compose(&d);
    let nf = positive.conjugate_by(&pi);
    debug_assert_eq!(nf, g.conjugate_by(&h));
    (h, nf)
}

/// Groups the elements of order `p` in `H` by characteristic polynomial and
/// returns, per polynomial, the set of normal forms reached. One normal form
/// per polynomial means the polynomial determines the `H`-class.
pub fn odd_classes_by_charpoly(p: u32) -> BTreeMap<String, BTreeSet<SignedPerm>> {
    let mut out: BTreeMap<String, BTreeSet<SignedPerm>> = BTreeMap::new();
    for g in all_elements().filter(|g| g.order() == p) {
        let (h, nf) = odd_normal_form(&g);
        assert_eq!(g.conjugate_by(&h), nf);
        out.entry(g.charpoly().to_string()).or_default().insert(nf);
    }
    out
}
