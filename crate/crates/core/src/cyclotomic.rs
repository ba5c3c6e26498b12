//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! An element is stored as its coordinates in the power basis
//! `1, ζ, …, ζ^{φ(n)−1}` after reduction modulo the `n`-th cyclotomic
//! polynomial. Operands with different conductors are promoted to the lcm.
//! The trigonometric values of the index formulas live here:
//! `−cot(aπ/p)cot(bπ/p)`, `csc²(cπ/p)` and `csc(cπ/p)cot(cπ/p)` all lie in
//! `Q(ζ_p)` for odd `p`, using `ζ_{2p} = −ζ_p^{(p+1)/2}`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{Float, FloatConst, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::decimal::{working_bits, Decimal, Fixed};
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("conductor must be positive")]
    BadConductor,
    #[error("residue {residue} is zero mod {p}: pole of the trigonometric term")]
    Pole { p: u32, residue: i64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
}

#[derive(Clone, Debug)]
pub struct Cyc<T> {
    n: u32,
    c: Vec<T>,
}

pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut phi = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            phi -= phi / d;
        }
        d += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

fn mobius(n: u32) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

pub fn is_odd_prime(p: u32) -> bool {
    p > 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Integer coefficients of `Φ_n`, from `Π_{d|n} (x^d − 1)^{μ(n/d)}`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("cache lock").get(&n) {
        return c.clone();
    }
    type Z = Poly<Rational>;
    let mut num = Z::one();
    let mut den = Z::one();
    for d in (1..=n).filter(|d| n % d == 0) {
        let f = Z::binomial(d as usize, Rational::one());
        match mobius(n / d) {
            1 => num = &num * &f,
            -1 => den = &den * &f,
            _ => {}
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    let coeffs: Vec<i64> = q
        .coeffs()
        .iter()
        .map(|c| c.to_integer().to_i64().expect("small coefficient"))
        .collect();
    cache.lock().expect("cache lock").insert(n, coeffs.clone());
    coeffs
}

fn modulus<T: Scalar>(n: u32) -> Poly<T> {
    Poly::from_ints(&cyclotomic_polynomial(n))
}

impl<T: Scalar> Cyc<T> {
    fn reduce(n: u32, p: Poly<T>) -> Self {
        let phi = euler_phi(n) as usize;
        let r = p.rem_monic(&modulus(n));
        let mut c: Vec<T> = r.coeffs().to_vec();
        c.resize(phi, T::zero());
        Cyc { n, c }
    }

    fn to_poly(&self) -> Poly<T> {
        Poly::new(self.c.clone())
    }

    pub fn zero(n: u32) -> Self {
        Cyc { n, c: vec![T::zero(); euler_phi(n) as usize] }
    }

    pub fn one(n: u32) -> Self {
        Self::from_scalar(n, T::one())
    }

    pub fn from_scalar(n: u32, s: T) -> Self {
        let mut z = Self::zero(n);
        z.c[0] = s;
        z
    }

    pub fn from_int(n: u32, k: i64) -> Self {
        Self::from_scalar(n, T::from_int(k))
    }

    /// `ζ_n^k`.
    pub fn root(n: u32, k: i64) -> Result<Self, CycError> {
        if n == 0 {
            return Err(CycError::BadConductor);
        }
        let e = k.rem_euclid(n as i64) as usize;
        Ok(Self::reduce(n, Poly::monomial(e)))
    }

    /// Builds `Σ c_i ζ_n^{e_i}` from exponent–coefficient pairs.
    pub fn from_terms(n: u32, terms: &[(i64, T)]) -> Self {
        let mut coeffs = vec![T::zero(); n as usize];
        for (e, c) in terms {
            let i = e.rem_euclid(n as i64) as usize;
            coeffs[i] = coeffs[i].clone() + c.clone();
        }
        Self::reduce(n, Poly::new(coeffs))
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// The same element written over `Q(ζ_m)`; `m` must be a multiple of the conductor.
    pub fn promote(&self, m: u32) -> Self {
        assert!(m % self.n == 0, "conductor {} does not divide {m}", self.n);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut coeffs = vec![T::zero(); (self.c.len() - 1) * step + 1];
        for (i, c) in self.c.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Self::reduce(m, Poly::new(coeffs))
    }

    fn align(a: &Self, b: &Self) -> (Self, Self) {
        if a.n == b.n {
            return (a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (a.promote(m), b.promote(m))
    }

    /// The Galois automorphism `ζ ↦ ζ^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        assert!(k.gcd(&(self.n as i64)) == 1, "exponent {k} not coprime to {}", self.n);
        let n = self.n as i64;
        let terms: Vec<(i64, T)> = self
            .c
            .iter()
            .enumerate()
            .map(|(i, c)| ((i as i64 * k).rem_euclid(n), c.clone()))
            .collect();
        Self::from_terms(self.n, &terms)
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplicative inverse over a field of coefficients.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s) = Poly::ext_gcd_left(&self.to_poly(), &modulus(self.n));
        debug_assert!(g.degree() == Some(0));
        Some(Self::reduce(self.n, s))
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv().expect("power of zero") } else { self.clone() };
        let mut acc = Self::one(self.n);
        let mut b = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// The constant coordinate when every other coordinate vanishes.
    pub fn as_scalar(&self) -> Option<T> {
        if self.c.iter().skip(1).all(Zero::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Matrix of multiplication by `self` on the power basis.
    pub fn multiplication_matrix(&self) -> Matrix<T> {
        let phi = self.c.len();
        let cols: Vec<Vec<T>> = (0..phi)
            .map(|j| (self * &Self::reduce(self.n, Poly::monomial(j))).c)
            .collect();
        Matrix::from_fn(phi, phi, |i, j| cols[j][i].clone())
    }

    /// Monic minimal polynomial over the coefficient field: the squarefree
    /// part of the characteristic polynomial of multiplication by `self`.
    pub fn minimal_polynomial(&self) -> Poly<T> {
        self.multiplication_matrix().charpoly().squarefree_part()
    }

    /// Floating-point value at `ζ = exp(2πi/n)`.
    pub fn to_complex<F: Float + FloatConst>(&self) -> (F, F)
    where
        T: ToPrimitive,
    {
        let n = F::from(self.n).expect("conductor fits");
        self.c.iter().enumerate().fold((F::zero(), F::zero()), |(re, im), (i, c)| {
            let theta = F::TAU() * F::from(i).expect("index fits") / n;
            let c = F::from(c.clone()).expect("coefficient converts");
            (re + c * theta.cos(), im + c * theta.sin())
        })
    }

    fn check_residue(p: u32, r: i64) -> Result<(), CycError> {
        if !is_odd_prime(p) {
            return Err(CycError::NotOddPrime(p));
        }
        if r.rem_euclid(p as i64) == 0 {
            return Err(CycError::Pole { p, residue: r });
        }
        Ok(())
    }

    /// `ζ_{2p}^c` written in `Q(ζ_p)` for odd `p`.
    pub fn half_root(p: u32, c: i64) -> Self {
        let sign = if c.rem_euclid(2) == 0 { T::one() } else { -T::one() };
        let e = c * (p as i64 + 1) / 2;
        Self::from_terms(p, &[(e, sign)])
    }
}

/// `−cot(aπ/p)·cot(bπ/p) = (1+ζ^a)(1+ζ^b) / ((1−ζ^a)(1−ζ^b))`.
pub fn cot_product<T: Scalar>(p: u32, a: i64, b: i64) -> Result<Cyc<T>, CycError> {
    Cyc::<T>::check_residue(p, a)?;
    Cyc::<T>::check_residue(p, b)?;
    let one = Cyc::<T>::one(p);
    let za = Cyc::root(p, a)?;
    let zb = Cyc::root(p, b)?;
    Ok(&(&(&one + &za) * &(&one + &zb)) / &(&(&one - &za) * &(&one - &zb)))
}

/// `csc²(cπ/p) = 4 / ((1−ζ^c)(1−ζ^{−c}))`.
pub fn csc_squared<T: Scalar>(p: u32, c: i64) -> Result<Cyc<T>, CycError> {
    Cyc::<T>::check_residue(p, c)?;
    let one = Cyc::<T>::one(p);
    let den = &(&one - &Cyc::root(p, c)?) * &(&one - &Cyc::root(p, -c)?);
    Ok(&Cyc::from_int(p, 4) / &den)
}

/// `csc(cπ/p)·cot(cπ/p) = −2w(w²+1)/(w²−1)²` with `w = ζ_{2p}^c`.
pub fn csc_cot<T: Scalar>(p: u32, c: i64) -> Result<Cyc<T>, CycError> {
    Cyc::<T>::check_residue(p, c)?;
    let one = Cyc::<T>::one(p);
    let w = Cyc::<T>::half_root(p, c);
    let w2 = &w * &w;
    let d = &w2 - &one;
    let num = &(&w * &(&w2 + &one)) * &Cyc::from_int(p, -2);
    Ok(&num / &(&d * &d))
}

/// `csc(aπ/p)·csc(bπ/p) = −4 w_a w_b / ((w_a²−1)(w_b²−1))` with `w = ζ_{2p}^{(·)}`.
pub fn csc_product<T: Scalar>(p: u32, a: i64, b: i64) -> Result<Cyc<T>, CycError> {
    Cyc::<T>::check_residue(p, a)?;
    Cyc::<T>::check_residue(p, b)?;
    let one = Cyc::<T>::one(p);
    let wa = Cyc::<T>::half_root(p, a);
    let wb = Cyc::<T>::half_root(p, b);
    let num = &(&wa * &wb) * &Cyc::from_int(p, -4);
    let den = &(&(&wa * &wa) - &one) * &(&(&wb * &wb) - &one);
    Ok(&num / &den)
}

/// `cot(aπ/m) = i(ζ_{2m}^{2a}+1)/(ζ_{2m}^{2a}−1)`, an element of `Q(ζ_{4m})`.
pub fn cot_pi<T: Scalar>(m: u32, a: i64) -> Result<Cyc<T>, CycError> {
    if m == 0 {
        return Err(CycError::BadConductor);
    }
    if a.rem_euclid(m as i64) == 0 {
        return Err(CycError::Pole { p: m, residue: a });
    }
    let n = 4 * m;
    let one = Cyc::<T>::one(n);
    let z = Cyc::root(n, 4 * a)?;
    let i = Cyc::root(n, m as i64)?;
    Ok(&(&i * &(&z + &one)) / &(&z - &one))
}

/// `cos(aπ/m) = (ζ_{2m}^a + ζ_{2m}^{−a}) / 2`.
pub fn cos_pi<T: Scalar>(m: u32, a: i64) -> Result<Cyc<T>, CycError> {
    if m == 0 {
        return Err(CycError::BadConductor);
    }
    let n = 2 * m;
    let s = &Cyc::root(n, a)? + &Cyc::root(n, -a)?;
    Ok(&s / &Cyc::from_int(n, 2))
}

/// `2cos(2πk/n) = ζ_n^k + ζ_n^{−k}`.
pub fn two_cos<T: Scalar>(n: u32, k: i64) -> Result<Cyc<T>, CycError> {
    Ok(&Cyc::root(n, k)? + &Cyc::root(n, -k)?)
}

/// Decimal value of an exact element at `ζ = exp(2πi/n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    pub re: Decimal,
    pub im: Decimal,
}

impl Cyc<Rational> {
    /// Evaluates with both parts rounded to `digits` places; the absolute
    /// error of each part is below `10^(−digits)`.
    pub fn embed(&self, digits: u32) -> Embedding {
        let mag: u64 = self
            .c
            .iter()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0);
        let guard = 2 * mag + 64 + u64::from(self.n).ilog2() as u64;
        let fx = Fixed { bits: working_bits(digits, guard) };
        let (mut re, mut im) = (num_bigint::BigInt::zero(), num_bigint::BigInt::zero());
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (cs, sn) = fx.cos_sin_turn(i as i64, u64::from(self.n));
            let cf = fx.from_rational(c);
            re += fx.mul(&cf, &cs);
            im += fx.mul(&cf, &sn);
        }
        Embedding { re: fx.to_decimal(&re, digits), im: fx.to_decimal(&im, digits) }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_complex::<f64>().0
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_scalar()
    }
}

impl<T: Scalar> PartialEq for Cyc<T> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::align(self, other);
        a.c == b.c
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl<T: Scalar> $tr for &Cyc<T> {
            type Output = Cyc<T>;
            fn $f(self, o: &Cyc<T>) -> Cyc<T> {
                let (a, b) = Cyc::align(self, o);
                $body(a, b)
            }
        }
        impl<T: Scalar> $tr for Cyc<T> {
            type Output = Cyc<T>;
            fn $f(self, o: Cyc<T>) -> Cyc<T> {
                (&self).$f(&o)
            }
        }
    };
}

binop!(Add, add, |a: Cyc<T>, b: Cyc<T>| Cyc {
    n: a.n,
    c: a.c.into_iter().zip(b.c).map(|(x, y)| x + y).collect()
});
binop!(Sub, sub, |a: Cyc<T>, b: Cyc<T>| Cyc {
    n: a.n,
    c: a.c.into_iter().zip(b.c).map(|(x, y)| x - y).collect()
});
binop!(Mul, mul, |a: Cyc<T>, b: Cyc<T>| Cyc::reduce(a.n, &a.to_poly() * &b.to_poly()));
binop!(Div, div, |a: Cyc<T>, b: Cyc<T>| &a * &b.inv().expect("division by zero"));

impl<T: Scalar> Neg for &Cyc<T> {
    type Output = Cyc<T>;
    fn neg(self) -> Cyc<T> {
        Cyc { n: self.n, c: self.c.iter().map(|x| -x.clone()).collect() }
    }
}

impl<T: Scalar> Neg for Cyc<T> {
    type Output = Cyc<T>;
    fn neg(self) -> Cyc<T> {
        -&self
    }
}

impl<T: Scalar> std::iter::Sum for Cyc<T> {
    fn sum<I: Iterator<Item = Cyc<T>>>(iter: I) -> Cyc<T> {
        iter.fold(Cyc::zero(1), |a, b| &a + &b)
    }
}

impl fmt::Display for Cyc<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = format!("z{}", self.n);
        let mut out = String::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let unit = mag.is_one();
            match i {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(&var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
