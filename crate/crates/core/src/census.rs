//! Censuses of fixed-point data for `Z_p`-actions (`p = 5, 7`) on a K3-type
//! manifold whose E8 ⊕ E8 part carries a nontrivial action on both summands,
//! together with the small fixtures for `Q8` and odd involutions.
//!
//! Fixed points come in groups with a fixed pattern of local exponents, listed
//! by [`vocabulary`]. Solutions are produced in two stages: the Lefschetz number
//! and the orbifold signature fix the group counts, then the exact `g`-signature
//! of every power fixes how groups distribute over the Galois classes of `k`.
//! The index filters run afterwards and every verdict is recorded.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::e8::{contains_subsystem, Dynkin, RootSystemType};
use crate::index::{
    fang_test, furuta_test, ks_rochlin_test, lens_space_of_point, orbifold_signature, signature_g, spin_number,
    total_defect, FixedPointData, IndexError, KsOutcome, LensSpace, RochlinTable, SpinVector, Surface, Verdict,
};
use crate::reps::{e8_census, RepDecomp, RepError};
use crate::sgnperm::{fixed_roots, SignedPerm};
use crate::{CycNum, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("no census for p = {0}")]
    UnsupportedPrime(u32),
}

pub type Result<T> = std::result::Result<T, CensusError>;

/// Signature of the K3-type manifold.
pub const SIGN_M: i64 = -16;
/// `b₂⁺` of the manifold and of its quotients (the three hyperbolic summands are fixed).
pub const B2_PLUS: i64 = 3;
/// Trace on the three hyperbolic summands, which the actions fix.
const HYPERBOLIC_TRACE: i64 = 6;

/// A pattern of fixed points that occur together: isolated points with
/// exponents `(αk, βk)` and spheres with normal exponent `γk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupType {
    pub name: &'static str,
    pub points: Vec<(i64, i64)>,
    /// `(genus, selfint, γ)`.
    pub surfaces: Vec<(u32, i64, i64)>,
}

impl GroupType {
    fn new(name: &'static str, points: &[(i64, i64)], surfaces: &[(u32, i64, i64)]) -> Self {
        GroupType { name, points: points.to_vec(), surfaces: surfaces.to_vec() }
    }

    pub fn data(&self, p: u32, k: i64) -> Result<FixedPointData> {
        Ok(FixedPointData::new(
            p,
            self.points.iter().map(|&(a, b)| (a * k, b * k)).collect(),
            self.surfaces.iter().map(|&(genus, selfint, c)| Surface { genus, selfint, c: c * k }).collect(),
        )?)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.points.len() as i64 + self.surfaces.iter().map(|s| 2 - 2 * i64::from(s.0)).sum::<i64>()
    }

    /// Total signature defect; independent of `k`.
    pub fn defect(&self, p: u32) -> Result<Rational> {
        Ok(total_defect(&self.data(p, 1)?)?)
    }

    /// Contribution to `Sign(g)` at `k`.
    pub fn signature(&self, p: u32, k: i64) -> Result<CycNum> {
        Ok(signature_g(&self.data(p, k)?)?)
    }

    /// Contribution to `Spin(g)` at `k`.
    pub fn spin(&self, p: u32, k: i64) -> Result<CycNum> {
        Ok(spin_number(&self.data(p, k)?)?)
    }
}

/// Group types for `p = 5` (types (1), (3), (4), (Ã₄)) and `p = 7` (types (1), (2), (3)).
pub fn vocabulary(p: u32) -> Result<Vec<GroupType>> {
    match p {
        5 => Ok(vec![
            GroupType::new("(1)", &[(1, -1)], &[]),
            GroupType::new("(3)", &[(1, 2), (-1, 4), (-1, 4)], &[]),
            GroupType::new("(4)", &[(1, 1), (-1, 3), (-1, 3), (-1, 3)], &[]),
            GroupType::new("(Ã4)", &[(-3, -1), (-3, -1), (3, 3)], &[(0, -2, 1)]),
        ]),
        7 => Ok(vec![
            GroupType::new("(1)", &[(1, -1)], &[]),
            GroupType::new("(2)", &[(2, 3), (-1, 6)], &[]),
            GroupType::new("(3)", &[(1, 2), (-1, 4), (-1, 4)], &[]),
        ]),
        _ => Err(CensusError::UnsupportedPrime(p)),
    }
}

/// Decompositions `(Θ₁, Θ₂)` of the two E8 summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ThetaProfile {
    pub first: RepDecomp,
    pub second: RepDecomp,
}

impl ThetaProfile {
    pub fn p(&self) -> u32 {
        self.first.p
    }

    /// `χ(F)` from the Lefschetz number.
    pub fn euler_total(&self) -> i64 {
        crate::index::lefschetz(HYPERBOLIC_TRACE + self.first.trace() + self.second.trace())
    }

    /// `Sign(M/G) = b₂⁺ − b₂⁻` of the quotient.
    pub fn quotient_signature(&self) -> i64 {
        -i64::from(self.first.fixed_rank() + self.second.fixed_rank())
    }

    pub fn quotient_b2_minus(&self) -> i64 {
        B2_PLUS + i64::from(self.first.fixed_rank() + self.second.fixed_rank())
    }

    /// Total defect `p·Sign(M/G) − Sign(M)` required of the fixed set.
    pub fn defect_total(&self) -> i64 {
        i64::from(self.p()) * self.quotient_signature() - SIGN_M
    }

    /// `Sign(g) = tr(g | H⁺) − tr(g | H⁻) = s₁ + s₂ − t₁ − t₂` for every `g ≠ 1`.
    pub fn target_signature(&self) -> i64 {
        -(self.first.trace() + self.second.trace())
    }

    pub fn cyclotomic_summands(&self) -> u32 {
        self.first.s + self.second.s
    }

    pub fn both_nontrivial(&self) -> bool {
        !self.first.is_trivial() && !self.second.is_trivial()
    }
}

impl fmt::Display for ThetaProfile {
    /// In `(r, t, s)` order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.first, self.second);
        write!(f, "({},{},{})+({},{},{})", a.r, a.t, a.s, b.r, b.t, b.s)
    }
}

/// Unordered pairs of nontrivial decompositions.
pub fn profiles(p: u32) -> Result<Vec<ThetaProfile>> {
    let c = e8_census(p)?;
    let mut out = Vec::new();
    for i in 0..c.len() {
        for j in i..c.len() {
            out.push(ThetaProfile { first: c[i], second: c[j] });
        }
    }
    Ok(out)
}

/// Nonnegative counts `n` with `Σ nᵢχᵢ = χ` and `Σ nᵢ defᵢ = def`.
pub fn count_solutions(types: &[GroupType], p: u32, euler: i64, defect: i64) -> Result<Vec<Vec<u32>>> {
    let chis: Vec<i64> = types.iter().map(GroupType::euler_characteristic).collect();
    let defs: Vec<Rational> = types.iter().map(|t| t.defect(p)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut cur = vec![0u32; types.len()];
    fn rec(
        i: usize,
        rest: i64,
        cur: &mut Vec<u32>,
        chis: &[i64],
        defs: &[Rational],
        defect: i64,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == chis.len() {
            let d: Rational = cur.iter().zip(defs).map(|(&n, d)| d * Rational::from_integer(n.into())).sum();
            if rest == 0 && d == Rational::from_integer(defect.into()) {
                out.push(cur.clone());
            }
            return;
        }
        for n in 0..=(rest / chis[i]) {
            cur[i] = n as u32;
            rec(i + 1, rest - n * chis[i], cur, chis, defs, defect, out);
        }
        cur[i] = 0;
    }
    if euler >= 0 {
        rec(0, euler, &mut cur, &chis, &defs, defect, &mut out);
    }
    Ok(out)
}

/// Stage-one solutions for `p = 5` in closed form:
/// `(u, v) = (u₀ − w + A, v₀ − w − 2A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage1Family {
    pub profile: ThetaProfile,
    pub u0: i64,
    pub v0: i64,
    /// Nonnegative `(u, v, w, A)` with `4A` at most the total fixed rank.
    pub solutions: Vec<[u32; 4]>,
}

impl Stage1Family {
    pub fn render(&self) -> String {
        let term = |c: i64, rest: &str| if c == 0 { rest.to_string() } else { format!("{c}{rest}") };
        format!("({}, {})", term(self.u0, "−w+A"), term(self.v0, "−w−2A"))
    }
}

pub fn solve_p5_stage1(profile: &ThetaProfile) -> Result<Stage1Family> {
    if profile.p() != 5 {
        return Err(CensusError::UnsupportedPrime(profile.p()));
    }
    // u + 3v + 4w + 5A = χ and 4u − 8v − 4w − 20A = def
    let (l, r) = (profile.euler_total(), profile.defect_total());
    let m = 4 * l - r;
    let fixed = i64::from(profile.first.fixed_rank() + profile.second.fixed_rank());
    if m % 20 != 0 {
        return Ok(Stage1Family { profile: *profile, u0: 0, v0: 0, solutions: Vec::new() });
    }
    let v0 = m / 20;
    let u0 = l - 3 * v0;
    let mut solutions = Vec::new();
    for a in 0..=fixed / 4 {
        for w in 0..=l {
            let (u, v) = (u0 - w + a, v0 - w - 2 * a);
            if u >= 0 && v >= 0 {
                solutions.push([u as u32, v as u32, w as u32, a as u32]);
            }
        }
    }
    Ok(Stage1Family { profile: *profile, u0, v0, solutions })
}

/// Exact `Sign(g^j)` of `data` for `j = 1 … p−1`.
fn signatures_of_powers(data: &FixedPointData) -> Result<Vec<CycNum>> {
    (1..i64::from(data.p)).map(|j| Ok(signature_g(&data.power(j)?)?)).collect()
}

fn all_equal_to(values: &[CycNum], target: i64) -> bool {
    values.iter().all(|v| v.as_rational() == Some(Rational::from_integer(target.into())))
}

/// A `p = 5` candidate: for each group type, how many groups sit at `k = ±1`
/// (class 1) and `k = ±2` (class 2).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct P5Candidate {
    pub profile: ThetaProfile,
    /// Per type (1), (3), (4), (Ã₄): `[class 1, class 2]`.
    pub classes: [[u32; 2]; 4],
}

impl P5Candidate {
    pub fn counts(&self) -> [u32; 4] {
        self.classes.map(|c| c[0] + c[1])
    }

    /// `(x₁, x₂, y₁, y₂, z₁, z₂)`: points of type `(k,k)`, `(k,2k)`, `(k,−k)` at
    /// `δ = −cot²(π/5)`, `−cot²(2π/5)`, … split by class.
    pub fn point_counts(&self) -> [u32; 6] {
        let [z, v, w, _] = self.classes;
        [2 * v[0] + w[0], 2 * v[1] + w[1], v[0] + 3 * w[0], v[1] + 3 * w[1], z[0], z[1]]
    }

    fn swapped(&self) -> Self {
        P5Candidate { profile: self.profile, classes: self.classes.map(|[a, b]| [b, a]) }
    }

    /// Representative under `g ↦ g²`.
    fn normalized(self) -> Self {
        let s = self.swapped();
        if (s.point_counts(), s.classes) > (self.point_counts(), self.classes) {
            s
        } else {
            self
        }
    }

    pub fn data(&self) -> Result<FixedPointData> {
        let types = vocabulary(5)?;
        let mut d = FixedPointData::empty(5)?;
        for (ty, cls) in types.iter().zip(self.classes) {
            for (k, &n) in [1i64, 2].iter().zip(&cls) {
                for _ in 0..n {
                    d.extend(&ty.data(5, *k)?);
                }
            }
        }
        Ok(d)
    }

    /// Name of the case in the standard listing, if it is one of them.
    pub fn case_label(&self) -> Option<&'static str> {
        let first = self.profile.first;
        let pc = self.point_counts();
        let [u, v, w, a] = self.counts();
        let regular_both = first.r == 1 && self.profile.second.r == 1;
        let mixed = first.r + self.profile.second.r == 1;
        let lbl = match (regular_both, mixed, [u, v, w, a], pc) {
            (true, _, [2, 4, 0, 0], [4, 4, 2, 2, 1, 1]) => "a",
            (true, _, [0, 2, 2, 0], [3, 3, 4, 4, 0, 0]) => "b",
            (true, _, [0, 2, 2, 0], [4, 2, 2, 6, 0, 0]) => "c",
            (_, true, [2, 1, 1, 0], [2, 1, 1, 3, 1, 1]) => "d",
            (true, _, [4, 0, 0, 2], [0, 0, 0, 0, 2, 2]) => "i",
            (true, _, [2, 1, 1, 1], [2, 1, 1, 3, 1, 1]) => "ii",
            (_, true, [4, 0, 0, 1], [0, 0, 0, 0, 2, 2]) => "iii",
            _ => return None,
        };
        Some(lbl)
    }

    pub fn id(&self) -> String {
        let [u, v, w, a] = self.counts();
        let [x1, x2, y1, y2, z1, z2] = self.point_counts();
        let base = format!("{} (u,v,w,A)=({u},{v},{w},{a}) x=({x1},{x2}) y=({y1},{y2}) z=({z1},{z2})", self.profile);
        match self.case_label() {
            Some(l) => format!("({l}) {base}"),
            None => base,
        }
    }
}

/// All class distributions compatible with the exact `g`-signature of every power.
pub fn refine_p5(family: &Stage1Family) -> Result<Vec<P5Candidate>> {
    let target = family.profile.target_signature();
    let mut seen = BTreeSet::new();
    for sol in &family.solutions {
        let [u, v, w, a] = *sol;
        for z1 in 0..=u {
            for v1 in 0..=v {
                for w1 in 0..=w {
                    for a1 in 0..=a {
                        let c = P5Candidate {
                            profile: family.profile,
                            classes: [[z1, u - z1], [v1, v - v1], [w1, w - w1], [a1, a - a1]],
                        };
                        if all_equal_to(&signatures_of_powers(&c.data()?)?, target) {
                            // (Ã₄) groups contribute the same at every k; keep them at class 1
                            let mut n = c.normalized();
                            n.classes[3] = [a, 0];
                            seen.insert(n);
                        }
                    }
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Verdicts and the values behind them for one candidate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Audit {
    pub id: String,
    pub data: String,
    pub spin: String,
    pub spin_vector: SpinVector,
    pub fang: Verdict,
    pub furuta: Verdict,
    pub b2_minus_quotient: i64,
    /// `Sign(N)` and the lens-space links, for pseudofree data.
    pub sign_n: i64,
    pub lens_spaces: Vec<LensSpace>,
    pub ks: Option<KsOutcome>,
    /// Upper bound on fixed tori of self-intersection 0: half the cyclotomic summands.
    pub max_tori: u32,
    pub survives: bool,
}

/// Applies the spin-number, Furuta and Kirby–Siebenmann filters.
pub fn audit(id: String, profile: &ThetaProfile, data: &FixedPointData, table: &RochlinTable) -> Result<Audit> {
    let spin = spin_number(data)?;
    let d = SpinVector::from_cyc(&spin, -SIGN_M / 8)?;
    let fang = fang_test(&d, B2_PLUS, true);
    let b2m = profile.quotient_b2_minus();
    let furuta = furuta_test(d.d0(), B2_PLUS, b2m);
    let sign_n = orbifold_signature(SIGN_M, data)?;
    let pseudofree = data.surfaces.is_empty();
    let lens_spaces = if pseudofree {
        data.isolated.iter().map(|&(a, b)| lens_space_of_point(data.p, a, b)).collect::<std::result::Result<_, _>>()?
    } else {
        Vec::new()
    };
    let ks = if pseudofree { Some(ks_rochlin_test(table, &lens_spaces, sign_n)?) } else { None };
    let survives = fang.survives() && furuta.survives() && ks.as_ref().map_or(true, KsOutcome::smoothable);
    Ok(Audit {
        id,
        data: data.to_string(),
        spin: render_cyc(&spin),
        spin_vector: d,
        fang,
        furuta,
        b2_minus_quotient: b2m,
        sign_n,
        lens_spaces,
        ks,
        max_tori: profile.cyclotomic_summands() / 2,
        survives,
    })
}

/// `Σ cᵢ μ^i` in the power basis.
pub fn render_cyc(x: &CycNum) -> String {
    if let Some(q) = x.as_rational() {
        return q.to_string();
    }
    let mut out = String::new();
    for (i, c) in x.coeffs().iter().enumerate() {
        if c == &Rational::from_integer(0.into()) {
            continue;
        }
        let neg = c < &Rational::from_integer(0.into());
        let mag = if neg { -c.clone() } else { c.clone() };
        out.push_str(match (out.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        let unit = mag == Rational::from_integer(1.into());
        match i {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !unit {
                    out.push_str(&format!("{mag}*"));
                }
                out.push_str(&format!("μ{}^{i}", x.conductor()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct P5Run {
    pub families: Vec<Stage1Family>,
    pub candidates: Vec<P5Candidate>,
    pub audits: Vec<Audit>,
}

impl P5Run {
    pub fn survivors(&self) -> Vec<&P5Candidate> {
        self.candidates.iter().zip(&self.audits).filter(|(_, a)| a.survives).map(|(c, _)| c).collect()
    }
}

pub fn run_p5(table: &RochlinTable) -> Result<P5Run> {
    let mut families = Vec::new();
    let mut candidates = Vec::new();
    for profile in profiles(5)? {
        let fam = solve_p5_stage1(&profile)?;
        candidates.extend(refine_p5(&fam)?);
        families.push(fam);
    }
    let audits = candidates
        .iter()
        .map(|c| audit(c.id(), &c.profile, &c.data()?, table))
        .collect::<Result<_>>()?;
    Ok(P5Run { families, candidates, audits })
}

/// A `p = 7` assignment: the absolute `k` of every group, per type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct P7Assignment {
    pub ks: Vec<Vec<i64>>,
}

impl P7Assignment {
    pub fn data(&self) -> Result<FixedPointData> {
        let types = vocabulary(7)?;
        let mut d = FixedPointData::empty(7)?;
        for (ty, ks) in types.iter().zip(&self.ks) {
            for &k in ks {
                d.extend(&ty.data(7, k)?);
            }
        }
        Ok(d)
    }

    /// Whether each type-(2) group at `k` and a type-(3) group at `2k` share one `±k`.
    pub fn equal_k(&self) -> bool {
        let classes: BTreeSet<i64> = self.ks[1]
            .iter()
            .copied()
            .chain(self.ks[2].iter().map(|k| k * 4))
            .map(|k| {
                let r = k.rem_euclid(7);
                r.min(7 - r)
            })
            .collect();
        classes.len() <= 1
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct P7Solution {
    pub counts: [u32; 3],
    /// Assignments up to `±k` per group matching `Sign(g^j) = target` for all `j`.
    pub signature_assignments: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct P7Run {
    pub profile: ThetaProfile,
    pub solutions: Vec<P7Solution>,
    pub assignments: Vec<P7Assignment>,
    pub audits: Vec<Audit>,
    pub equal_k_forced: bool,
    /// Surviving fixed sets up to order, simultaneous sign and `g ↦ g^j`.
    pub survivor_structures: Vec<FixedPointData>,
}

impl P7Run {
    pub fn survivors(&self) -> Vec<(&P7Assignment, &Audit)> {
        self.assignments.iter().zip(&self.audits).filter(|(_, a)| a.survives).collect()
    }
}

fn multisets(n: usize, choices: &[i64]) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &c) in choices.iter().enumerate() {
        for mut rest in multisets(n - 1, &choices[i..]) {
            rest.insert(0, c);
            out.push(rest);
        }
    }
    out
}

fn assignments(counts: &[u32], choices: &[i64]) -> Vec<Vec<Vec<i64>>> {
    counts.iter().fold(vec![Vec::new()], |acc, &n| {
        let ms = multisets(n as usize, choices);
        acc.into_iter()
            .flat_map(|prefix| {
                ms.iter().map(move |m| {
                    let mut v = prefix.clone();
                    v.push(m.clone());
                    v
                })
            })
            .collect()
    })
}

pub fn run_p7(table: &RochlinTable) -> Result<P7Run> {
    let types = vocabulary(7)?;
    let c = e8_census(7)?;
    let profile = ThetaProfile { first: c[0], second: c[0] };
    let target = profile.target_signature();
    let counts = count_solutions(&types, 7, profile.euler_total(), profile.defect_total())?;
    let mut solutions = Vec::new();
    let mut full = Vec::new();
    for sol in counts {
        let sol: [u32; 3] = sol.try_into().expect("three types");
        let mut n = 0;
        for ks in assignments(&sol, &[1, 2, 3]) {
            let asg = P7Assignment { ks };
            if all_equal_to(&signatures_of_powers(&asg.data()?)?, target) {
                n += 1;
            }
        }
        if n > 0 {
            for ks in assignments(&sol, &[1, 2, 3, 4, 5, 6]) {
                let asg = P7Assignment { ks };
                if all_equal_to(&signatures_of_powers(&asg.data()?)?, target) {
                    full.push(asg);
                }
            }
        }
        solutions.push(P7Solution { counts: sol, signature_assignments: n });
    }
    let audits: Vec<Audit> = full
        .iter()
        .map(|a| audit(format!("k={:?}", a.ks), &profile, &a.data()?, table))
        .collect::<Result<_>>()?;
    let equal_k_forced = full.iter().zip(&audits).all(|(a, au)| !au.survives || a.equal_k());
    let mut structures: BTreeMap<String, FixedPointData> = BTreeMap::new();
    for (a, au) in full.iter().zip(&audits) {
        if au.survives {
            let c = galois_canonical(&a.data()?)?;
            structures.insert(c.to_string(), c);
        }
    }
    let survivor_structures = structures.into_values().collect();
    Ok(P7Run { profile, solutions, assignments: full, audits, equal_k_forced, survivor_structures })
}

/// Canonical form up to order, simultaneous sign and replacing `g` by a power.
pub fn galois_canonical(data: &FixedPointData) -> Result<FixedPointData> {
    let mut best: Option<(String, FixedPointData)> = None;
    for j in 1..i64::from(data.p) {
        let c = data.power(j)?.canonical();
        let key = c.to_string();
        if best.as_ref().map_or(true, |(b, _)| key < *b) {
            best = Some((key, c));
        }
    }
    Ok(best.expect("p > 1").1)
}

/// Contributions of each group type to `Sign(g)` (δ) and `Spin(g)` (ν) at `k = 1, 2, 3`.
pub fn delta_nu_tables(p: u32) -> Result<Vec<(String, Vec<CycNum>, Vec<CycNum>)>> {
    vocabulary(p)?
        .iter()
        .map(|t| {
            let ks = 1..=3;
            let delta = ks.clone().map(|k| t.signature(p, k)).collect::<Result<_>>()?;
            let nu = ks.map(|k| t.spin(p, k)).collect::<Result<_>>()?;
            Ok((t.name.to_string(), delta, nu))
        })
        .collect()
}

/// Which extended Dynkin types `Γ` could carry a group of fixed points: the
/// congruence `n ≡ −1` (`Ã_n`) or `n ≡ 4` (`D̃_n`) mod `p`, a root lattice of
/// rank `n` fixed by the action, and that lattice found among the fixed roots of
/// the standard order-`p` element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCheck {
    pub p: u32,
    pub fixed_rank: u32,
    pub fixed_roots: usize,
    /// `(type, congruence holds, rank fits, found)`.
    pub candidates: Vec<(String, bool, bool, bool)>,
    pub admissible: Vec<String>,
    /// Further subsystems tested for absence.
    pub absent: Vec<(String, bool)>,
}

pub fn gamma_admissibility(p: u32) -> Result<GammaCheck> {
    let census = e8_census(p)?;
    let fixed_rank = census.iter().map(RepDecomp::fixed_rank).max().unwrap_or(0);
    let g = SignedPerm::standard_cycle(p as u8);
    let roots = fixed_roots(&[g]);
    let mut candidates = Vec::new();
    let mut admissible = Vec::new();
    for n in 1..=8u8 {
        for (name, dynkin, cong) in [
            ("A", Dynkin::A(n), (i64::from(n) + 1) % i64::from(p) == 0),
            ("D", Dynkin::D(n), n >= 4 && (i64::from(n) - 4) % i64::from(p) == 0),
        ] {
            if !cong {
                continue;
            }
            let fits = u32::from(n) <= fixed_rank;
            let found = fits && contains_subsystem(&roots, &RootSystemType::new(vec![dynkin]));
            let label = format!("{name}~{n}");
            if found {
                admissible.push(label.clone());
            }
            candidates.push((label, cong, fits, found));
        }
    }
    let absent_types: Vec<RootSystemType> = match p {
        5 => vec![RootSystemType::new(vec![Dynkin::D(4)]), RootSystemType::new(vec![Dynkin::A(2), Dynkin::A(2)])],
        7 => vec![RootSystemType::new(vec![Dynkin::A(2)])],
        _ => Vec::new(),
    };
    let absent = absent_types.iter().map(|t| (t.to_string(), !contains_subsystem(&roots, t))).collect();
    Ok(GammaCheck { p, fixed_rank, fixed_roots: roots.len(), candidates, admissible, absent })
}

/// Lefschetz and orbifold-signature system for an order-4 element `g` of `Q8`
/// whose square has 8 isolated fixed points, and the counting argument over
/// those 8 points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Q8Fixture {
    /// `(t, s₊, s₋)`.
    pub system_solutions: Vec<(i64, i64, i64)>,
    pub fixed_point_counts: Vec<i64>,
    /// Counts for which some action of `Q8/{±1}` on the 8 points is consistent.
    pub feasible_counts: Vec<i64>,
}

type Perm8 = [u8; 8];

fn involutions8() -> Vec<Perm8> {
    let mut out = Vec::new();
    fn rec(p: &mut Perm8, used: u8, i: usize, out: &mut Vec<Perm8>) {
        if i == 8 {
            out.push(*p);
            return;
        }
        if used & (1 << i) != 0 {
            return rec(p, used, i + 1, out);
        }
        p[i] = i as u8;
        rec(p, used | (1 << i), i + 1, out);
        for j in i + 1..8 {
            if used & (1 << j) == 0 {
                p[i] = j as u8;
                p[j] = i as u8;
                rec(p, used | (1 << i) | (1 << j), i + 1, out);
                p[j] = j as u8;
            }
        }
    }
    rec(&mut [0; 8], 0, 0, &mut out);
    out
}

fn fixed_set(p: &Perm8) -> u8 {
    (0..8).filter(|&i| p[i] == i as u8).fold(0, |m, i| m | (1 << i))
}

/// Whether `Q8` can act on the 8 fixed points of `−1` with `i, j, k` each fixing
/// `n` of them. At a fixed point of `g`, any other order-4 element inverts `g`,
/// so it cannot fix a point where `g` has weights `(1,1)` or `(3,3)`; such points
/// number `n − 4`.
fn q8_count_feasible(n: usize) -> bool {
    let invs = involutions8();
    let by_fixed: Vec<&Perm8> = invs.iter().filter(|p| fixed_set(p).count_ones() as usize == n).collect();
    for si in &by_fixed {
        for sj in &by_fixed {
            let ij: Perm8 = std::array::from_fn(|x| si[sj[x] as usize]);
            let ji: Perm8 = std::array::from_fn(|x| sj[si[x] as usize]);
            if ij != ji || fixed_set(&ij).count_ones() as usize != n {
                continue;
            }
            let fs = [fixed_set(si), fixed_set(sj), fixed_set(&ij)];
            let ok = (0..3).all(|g| {
                let others = fs[(g + 1) % 3] | fs[(g + 2) % 3];
                (fs[g] & !others).count_ones() as usize >= n - 4
            });
            if ok {
                return true;
            }
        }
    }
    false
}

pub fn q8_fixture_solver() -> Q8Fixture {
    let mut system_solutions = Vec::new();
    for t in 0..=14i64 {
        // s₊ + s₋ = 2t − 12 and 2s₊ − 2s₋ = 40 − 4t
        let (sum, diff2) = (2 * t - 12, 40 - 4 * t);
        if diff2 % 2 != 0 {
            continue;
        }
        let diff = diff2 / 2;
        if (sum + diff) % 2 != 0 {
            continue;
        }
        let (sp, sm) = ((sum + diff) / 2, (sum - diff) / 2);
        if sp >= 0 && sm >= 0 && sp + sm <= 8 {
            system_solutions.push((t, sp, sm));
        }
    }
    let fixed_point_counts: Vec<i64> =
        system_solutions.iter().map(|&(_, a, b)| a + b).collect::<BTreeSet<_>>().into_iter().collect();
    let feasible_counts = fixed_point_counts.iter().copied().filter(|&n| q8_count_feasible(n as usize)).collect();
    Q8Fixture { system_solutions, fixed_point_counts, feasible_counts }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FixedSetShape {
    Empty,
    TwoTori,
    SpheresAndTorus { spheres: usize, tori: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InvolutionVerdict {
    Admissible(FixedSetShape),
    Rejected(String),
}

/// Fixed surfaces `(genus, Σ²)` of an odd-type involution whose quotient has
/// `b₂⁺ = 1`: the Lefschetz and signature equations give `Σ (χ + Σ²) = 0`.
pub fn involution_fixture_check(components: &[(u32, i64)]) -> InvolutionVerdict {
    let chi = |g: u32| 2 - 2 * i64::from(g);
    let total: i64 = components.iter().map(|&(g, s)| chi(g) + s).sum();
    if total != 0 {
        return InvolutionVerdict::Rejected(format!("Σ(χ + Σ²) = {total}"));
    }
    for &(g, s) in components {
        if s % 2 != 0 || (s < 0 && s > -2) {
            return InvolutionVerdict::Rejected(format!("genus {g}: Σ² = {s} is not even"));
        }
        if chi(g) + s != 0 {
            return InvolutionVerdict::Rejected(format!("genus {g}: χ + Σ² = {}", chi(g) + s));
        }
    }
    let spheres = components.iter().filter(|c| c.0 == 0).count();
    let tori = components.iter().filter(|c| c.0 == 1).count();
    let shape = match (spheres, tori) {
        _ if components.is_empty() => FixedSetShape::Empty,
        (0, 2) => FixedSetShape::TwoTori,
        (_, t) if t <= 1 && spheres + tori == components.len() => FixedSetShape::SpheresAndTorus { spheres, tori },
        _ => return InvolutionVerdict::Rejected(format!("{spheres} spheres and {tori} tori")),
    };
    InvolutionVerdict::Admissible(shape)
}

/// Machine-readable record of a run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub candidates: Vec<Record>,
    pub filters: Vec<Record>,
    pub survivors: Vec<String>,
    pub checks: Vec<Check>,
    pub timings: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub values: BTreeMap<String, String>,
}

impl Record {
    pub fn new(id: impl Into<String>) -> Self {
        Record { id: id.into(), values: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.values.insert(key.to_string(), value.to_string());
        self
    }
}

/// One asserted fact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), ..Default::default() }
    }

    pub fn input(&mut self, key: &str, value: impl fmt::Display) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Exact value with its decimal rendering.
pub fn exact_and_decimal(x: &CycNum, digits: u32) -> String {
    let e = x.embed(digits);
    format!("{} ≈ {}", render_cyc(x), e.re)
}

fn audit_records(audits: &[Audit]) -> Vec<Record> {
    let mut out = Vec::new();
    for a in audits {
        out.push(
            Record::new(&a.id)
                .with("filter", "fang")
                .with("spin", &a.spin)
                .with("d", &a.spin_vector)
                .with("verdict", a.fang),
        );
        out.push(
            Record::new(&a.id)
                .with("filter", "furuta")
                .with("ind", a.spin_vector.d0())
                .with("b2+", B2_PLUS)
                .with("b2-", a.b2_minus_quotient)
                .with("verdict", a.furuta),
        );
        let ks = match &a.ks {
            Some(k) => Record::new(&a.id)
                .with("filter", "kirby-siebenmann")
                .with("sign_n", k.sign_n)
                .with("rochlin", k.rochlin_total)
                .with("boundary", lens_summary(&a.lens_spaces))
                .with("ks", k.ks)
                .with("verdict", if k.smoothable() { Verdict::Survives } else { Verdict::RuledOut }),
            None => Record::new(&a.id).with("filter", "kirby-siebenmann").with("verdict", "not pseudofree"),
        };
        out.push(ks);
    }
    out
}

/// `6×L(5,1) + 8×L(5,2)` style summary, up to `L(p,q) ≅ L(p,q⁻¹)`.
pub fn lens_summary(ls: &[LensSpace]) -> String {
    let mut m: BTreeMap<LensSpace, usize> = BTreeMap::new();
    for l in ls {
        *m.entry(l.canonical()).or_default() += 1;
    }
    let parts: Vec<String> = m.iter().map(|(l, n)| format!("{n}×{l}")).collect();
    if parts.is_empty() {
        "∅".into()
    } else {
        parts.join(" + ")
    }
}

pub fn p5_report(run: &P5Run) -> Report {
    let mut r = Report::new("census p5");
    r.input("p", 5);
    r.input("sign_m", SIGN_M);
    r.input("b2+", B2_PLUS);
    for f in &run.families {
        let sols: Vec<String> = f.solutions.iter().map(|s| format!("({},{},{},{})", s[0], s[1], s[2], s[3])).collect();
        r.candidates.push(
            Record::new(format!("stage1 {}", f.profile))
                .with("(u,v)", f.render())
                .with("solutions (u,v,w,A)", sols.join(" "))
                .with("both nontrivial", f.profile.both_nontrivial()),
        );
    }
    for (c, a) in run.candidates.iter().zip(&run.audits) {
        r.candidates.push(
            Record::new(c.id())
                .with("profile", c.profile)
                .with("fixed points", &a.data)
                .with("Sign(g^j)", c.profile.target_signature())
                .with("Sign(N)", a.sign_n)
                .with("max tori", a.max_tori),
        );
    }
    r.filters = audit_records(&run.audits);
    r.survivors = run.audits.iter().filter(|a| a.survives).map(|a| a.id.clone()).collect();
    r
}

pub fn p7_report(run: &P7Run, digits: u32) -> Result<Report> {
    let mut r = Report::new("census p7");
    r.input("p", 7);
    r.input("profile", run.profile);
    r.input("sign_m", SIGN_M);
    for s in &run.solutions {
        r.candidates.push(
            Record::new(format!("(u,v,w)=({},{},{})", s.counts[0], s.counts[1], s.counts[2]))
                .with("signature assignments", s.signature_assignments)
                .with("eliminated by signature", s.signature_assignments == 0),
        );
    }
    for (name, delta, nu) in delta_nu_tables(7)? {
        let row = |v: &[CycNum]| v.iter().map(|x| x.embed(digits).re.to_string()).collect::<Vec<_>>().join(", ");
        r.candidates.push(Record::new(format!("type {name}")).with("delta k=1,2,3", row(&delta)).with("nu k=1,2,3", row(&nu)));
    }
    for (a, au) in run.assignments.iter().zip(&run.audits) {
        r.candidates.push(
            Record::new(&au.id).with("fixed points", &au.data).with("equal k", a.equal_k()).with("Sign(N)", au.sign_n),
        );
    }
    r.filters = audit_records(&run.audits);
    r.survivors = run.survivor_structures.iter().map(|d| d.to_string()).collect();
    r.check("equal k forced", run.equal_k_forced, "every Fang survivor has one ±k across groups");
    Ok(r)
}
