//! Second homology of the Kummer surface, spanned symbolically by 16
//! exceptional spheres `Σ(ε₀,ε₁,ε₂,ε₃)` and 12 proper transforms `Σ_j(κ,τ)`,
//! with the intersection pairing on these generators. Also the basic-class
//! combinatorics of knot-surgered K3 surfaces.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::e8::DIAGRAM_EDGES;
use crate::QMatrix;

pub const GENERATORS: usize = 28;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KummerError {
    #[error("list {list}: pairing of f{i} and f{j} is {found}, expected {expected}")]
    GramMismatch { list: usize, i: usize, j: usize, found: i64, expected: i64 },
    #[error("pairing of {a} and {b} is {found}, expected 0")]
    NotOrthogonal { a: String, b: String, found: i64 },
    #[error("fiber classes fail: {0}")]
    Fibers(String),
    #[error("degrees {0:?} must satisfy 1 < d1 < d2 < d3 and be pairwise coprime")]
    BadDegrees([i64; 3]),
}

/// A generator: exceptional sphere or proper transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Exceptional([i8; 4]),
    Proper { j: u8, kappa: i8, tau: i8 },
}

fn bit(s: i8) -> usize {
    usize::from(s == -1)
}

fn sign(b: usize) -> i8 {
    if b == 1 {
        -1
    } else {
        1
    }
}

impl Generator {
    pub fn index(&self) -> usize {
        match *self {
            Generator::Exceptional(e) => bit(e[0]) * 8 + bit(e[1]) * 4 + bit(e[2]) * 2 + bit(e[3]),
            Generator::Proper { j, kappa, tau } => 16 + 4 * (j as usize - 1) + 2 * bit(kappa) + bit(tau),
        }
    }

    pub fn from_index(i: usize) -> Generator {
        if i < 16 {
            Generator::Exceptional([sign(i >> 3 & 1), sign(i >> 2 & 1), sign(i >> 1 & 1), sign(i & 1)])
        } else {
            let k = i - 16;
            Generator::Proper { j: (k / 4 + 1) as u8, kappa: sign(k >> 1 & 1), tau: sign(k & 1) }
        }
    }

    /// The pairing rules on generators.
    fn rule(a: Generator, b: Generator) -> i64 {
        use Generator::*;
        match (a, b) {
            (Exceptional(x), Exceptional(y)) => {
                if x == y {
                    -2
                } else {
                    0
                }
            }
            (Proper { j, kappa, tau }, Exceptional(e)) | (Exceptional(e), Proper { j, kappa, tau }) => {
                i64::from(e[0] == kappa && e[j as usize] == tau)
            }
            (Proper { j, kappa, tau }, Proper { j: j2, kappa: k2, tau: t2 }) => {
                if j == j2 {
                    if (kappa, tau) == (k2, t2) {
                        -2
                    } else {
                        0
                    }
                } else if kappa == k2 {
                    -1
                } else {
                    0
                }
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Exceptional(e) => write!(f, "Σ({},{},{},{})", e[0], e[1], e[2], e[3]),
            Generator::Proper { j, kappa, tau } => write!(f, "Σ{j}({kappa},{tau})"),
        }
    }
}

/// The 28×28 generator pairing matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingTable {
    m: Vec<[i64; GENERATORS]>,
}

impl PairingTable {
    pub fn standard() -> Self {
        let m = (0..GENERATORS)
            .map(|i| std::array::from_fn(|j| Generator::rule(Generator::from_index(i), Generator::from_index(j))))
            .collect();
        PairingTable { m }
    }

    /// Overwrites one symmetric pair of entries.
    pub fn with_entry(mut self, a: Generator, b: Generator, value: i64) -> Self {
        self.m[a.index()][b.index()] = value;
        self.m[b.index()][a.index()] = value;
        self
    }

    pub fn entry(&self, a: Generator, b: Generator) -> i64 {
        self.m[a.index()][b.index()]
    }

    pub fn pair(&self, x: &KummerClass, y: &KummerClass) -> i64 {
        let mut s = 0;
        for (i, &a) in x.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.c.iter().enumerate() {
                s += a * b * self.m[i][j];
            }
        }
        s
    }
}

/// An integer combination of the 28 generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KummerClass {
    c: [i64; GENERATORS],
}

impl KummerClass {
    pub const ZERO: KummerClass = KummerClass { c: [0; GENERATORS] };

    pub fn gen(g: Generator) -> Self {
        let mut c = [0; GENERATORS];
        c[g.index()] = 1;
        KummerClass { c }
    }

    pub fn exc(e0: i8, e1: i8, e2: i8, e3: i8) -> Self {
        Self::gen(Generator::Exceptional([e0, e1, e2, e3]))
    }

    pub fn prop(j: u8, kappa: i8, tau: i8) -> Self {
        Self::gen(Generator::Proper { j, kappa, tau })
    }

    pub fn coeffs(&self) -> &[i64; GENERATORS] {
        &self.c
    }

    pub fn scale(&self, k: i64) -> Self {
        KummerClass { c: self.c.map(|x| k * x) }
    }

    pub fn from_coeffs(c: [i64; GENERATORS]) -> Self {
        KummerClass { c }
    }
}

impl Add for KummerClass {
    type Output = KummerClass;
    fn add(self, o: KummerClass) -> KummerClass {
        KummerClass { c: std::array::from_fn(|i| self.c[i] + o.c[i]) }
    }
}

impl Sub for KummerClass {
    type Output = KummerClass;
    fn sub(self, o: KummerClass) -> KummerClass {
        self + (-o)
    }
}

impl Neg for KummerClass {
    type Output = KummerClass;
    fn neg(self) -> KummerClass {
        self.scale(-1)
    }
}

impl fmt::Display for KummerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &k) in self.c.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let g = Generator::from_index(i);
            let sep = match (first, k < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mag = if k.abs() == 1 { String::new() } else { format!("{}·", k.abs()) };
            write!(f, "{sep}{mag}{g}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn pair(x: &KummerClass, y: &KummerClass) -> i64 {
    PairingTable::standard().pair(x, y)
}

/// Fiber class of the `j`-th elliptic fibration:
/// `2·Σ_j(1,1)` plus the four exceptional spheres with `ε₀ = ε_j = 1`.
pub fn fiber_class(j: u8) -> KummerClass {
    let mut t = KummerClass::prop(j, 1, 1).scale(2);
    for i in 0..16 {
        if let Generator::Exceptional(e) = Generator::from_index(i) {
            if e[0] == 1 && e[j as usize] == 1 {
                t = t + KummerClass::gen(Generator::from_index(i));
            }
        }
    }
    t
}

/// The two disjoint `−E8` bases; `kappa = 1` gives the first, `−1` the second.
pub fn e8_basis(kappa: i8) -> [KummerClass; 8] {
    let k = kappa;
    let x = KummerClass::exc;
    let s = KummerClass::prop;
    [
        -s(3, k, -1) - x(k, -1, -1, -1) - x(k, 1, -1, -1),
        x(k, 1, -1, -1),
        s(2, k, -1) + x(k, -1, -1, -1),
        x(k, 1, -1, 1),
        s(3, k, 1) + x(k, -1, -1, 1),
        x(k, 1, 1, 1),
        -s(2, k, 1) - x(k, 1, 1, -1) - x(k, 1, 1, 1),
        s(1, k, -1) + x(k, -1, 1, 1),
    ]
}

/// `−E8` in the diagram convention: `−2` on the diagonal, `+1` on edges.
pub fn minus_e8_gram() -> [[i64; 8]; 8] {
    let mut g = [[0i64; 8]; 8];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(a, b) in &DIAGRAM_EDGES {
        g[a][b] = 1;
        g[b][a] = 1;
    }
    g
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct E8BasesReport {
    pub grams: [[[i64; 8]; 8]; 2],
    pub cross_pairs_zero: bool,
    pub fibers_orthogonal: bool,
    pub fiber_products: [[i64; 3]; 3],
    /// Rank of the 19 classes as vectors in `Z²⁸`.
    pub span_rank: usize,
    pub gram_rank: usize,
    pub radical_dimension: usize,
    pub radical_is_fiber_span: bool,
}

fn rational_rank(rows: &[Vec<i64>]) -> usize {
    QMatrix::from_int_rows(rows).rank()
}

/// Checks both lists against `−E8`, mutual orthogonality, orthogonality to
/// the fiber classes, and the fiber products themselves.
pub fn verify_e8_bases(table: &PairingTable) -> Result<E8BasesReport, KummerError> {
    let target = minus_e8_gram();
    let lists = [e8_basis(1), e8_basis(-1)];
    let mut grams = [[[0i64; 8]; 8]; 2];
    for (l, list) in lists.iter().enumerate() {
        for i in 0..8 {
            for j in 0..8 {
                let v = table.pair(&list[i], &list[j]);
                if v != target[i][j] {
                    return Err(KummerError::GramMismatch { list: l + 1, i: i + 1, j: j + 1, found: v, expected: target[i][j] });
                }
                grams[l][i][j] = v;
            }
        }
    }
    for (i, a) in lists[0].iter().enumerate() {
        for (j, b) in lists[1].iter().enumerate() {
            let v = table.pair(a, b);
            if v != 0 {
                return Err(KummerError::NotOrthogonal { a: format!("list-1 f{}", i + 1), b: format!("list-2 f{}", j + 1), found: v });
            }
        }
    }
    let fibers = [fiber_class(1), fiber_class(2), fiber_class(3)];
    for (l, list) in lists.iter().enumerate() {
        for (i, a) in list.iter().enumerate() {
            for (j, t) in fibers.iter().enumerate() {
                let v = table.pair(a, t);
                if v != 0 {
                    return Err(KummerError::NotOrthogonal { a: format!("list-{} f{}", l + 1, i + 1), b: format!("[T{}]", j + 1), found: v });
                }
            }
        }
    }
    let mut fiber_products = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            fiber_products[i][j] = table.pair(&fibers[i], &fibers[j]);
        }
    }
    if fiber_products.iter().flatten().any(|&v| v != 0) {
        return Err(KummerError::Fibers(format!("{fiber_products:?}")));
    }
    let all: Vec<KummerClass> = lists.iter().flatten().chain(fibers.iter()).copied().collect();
    let span_rank = rational_rank(&all.iter().map(|c| c.c.to_vec()).collect::<Vec<_>>());
    let gram: Vec<Vec<i64>> = all.iter().map(|a| all.iter().map(|b| table.pair(a, b)).collect()).collect();
    let gram_q = QMatrix::from_int_rows(&gram);
    let gram_rank = gram_q.rank();
    let radical = gram_q.nullspace();
    // the fiber classes are the last three of the 19; the radical is their span
    // iff it has dimension 3 and each fiber coordinate vector lies in it
    let fiber_in_radical = (16..19).all(|k| gram.iter().all(|row| row[k] == 0));
    Ok(E8BasesReport {
        grams,
        cross_pairs_zero: true,
        fibers_orthogonal: true,
        fiber_products,
        span_rank,
        gram_rank,
        radical_dimension: radical.len(),
        radical_is_fiber_span: radical.len() == 3 && fiber_in_radical,
    })
}

/// A basic class `2·Σ b_j d_j [T_j]` with its Seiberg–Witten coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasicClass {
    pub b: [i8; 3],
    pub degrees: [i64; 3],
}

impl BasicClass {
    /// Coefficients against `[T₁], [T₂], [T₃]`.
    pub fn coords(&self) -> [i64; 3] {
        std::array::from_fn(|j| 2 * i64::from(self.b[j]) * self.degrees[j])
    }

    /// Coefficient in `Π_j (1 − t_j^{d_j} − t_j^{−d_j})`.
    pub fn sw_coefficient(&self) -> i64 {
        self.b.iter().map(|&b| if b == 0 { 1 } else { -1 }).product()
    }

    pub fn is_canonical(&self) -> bool {
        self.b == [1, 1, 1]
    }
}

pub fn check_degrees(d: [i64; 3]) -> Result<(), KummerError> {
    use num_integer::Integer;
    let ok = 1 < d[0] && d[0] < d[1] && d[1] < d[2] && d[0].gcd(&d[1]) == 1 && d[0].gcd(&d[2]) == 1 && d[1].gcd(&d[2]) == 1;
    if ok {
        Ok(())
    } else {
        Err(KummerError::BadDegrees(d))
    }
}

pub fn basic_classes(d: [i64; 3]) -> Result<Vec<BasicClass>, KummerError> {
    check_degrees(d)?;
    let mut out = Vec::with_capacity(27);
    for b0 in [-1i8, 0, 1] {
        for b1 in [-1i8, 0, 1] {
            for b2 in [-1i8, 0, 1] {
                out.push(BasicClass { b: [b0, b1, b2], degrees: d });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rigidity {
    pub compatible: bool,
    /// For each admissible isomorphism, the image of `[T′_j]` as a vector in
    /// the `[T_j]` coordinates.
    pub maps: Vec<[[i64; 3]; 3]>,
}

/// Searches for integral maps `[T′_j] ↦ Σ m_{jk}[T_k]` carrying the basic
/// classes of `d′` bijectively onto those of `d`. The image of `2d′_j[T′_j]`
/// must itself be basic, so `2d′_j` divides each of its coordinates.
pub fn rigidity_check(d: [i64; 3], d_prime: [i64; 3]) -> Result<Rigidity, KummerError> {
    check_degrees(d)?;
    check_degrees(d_prime)?;
    let target: BTreeSet<[i64; 3]> = basic_classes(d)?.iter().map(BasicClass::coords).collect();
    let candidates: Vec<Vec<[i64; 3]>> = (0..3)
        .map(|j| {
            target
                .iter()
                .filter(|c| c.iter().any(|&x| x != 0) && c.iter().all(|&x| x % (2 * d_prime[j]) == 0))
                .map(|c| c.map(|x| x / (2 * d_prime[j])))
                .collect()
        })
        .collect();
    let mut maps = Vec::new();
    for m0 in &candidates[0] {
        for m1 in &candidates[1] {
            for m2 in &candidates[2] {
                let m = [*m0, *m1, *m2];
                let image: BTreeSet<[i64; 3]> = basic_classes(d_prime)?
                    .iter()
                    .map(|bc| {
                        let w = bc.coords();
                        std::array::from_fn(|k| (0..3).map(|j| w[j] * m[j][k]).sum())
                    })
                    .collect();
                if image == target {
                    maps.push(m);
                }
            }
        }
    }
    Ok(Rigidity { compatible: !maps.is_empty(), maps })
}
