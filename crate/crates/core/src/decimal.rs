//! Fixed-point evaluation of `cos`/`sin` at rational multiples of `π`, and a
//! decimal type for reporting the results.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::Rational;

/// `mantissa · 10^(−scale)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    pub mantissa: BigInt,
    pub scale: u32,
}

impl Decimal {
    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().expect("decimal renders as a float literal")
    }

    /// Rounds to fewer places (half away from zero).
    pub fn round_to(&self, scale: u32) -> Decimal {
        if scale >= self.scale {
            let f = BigInt::from(10u32).pow(scale - self.scale);
            return Decimal { mantissa: &self.mantissa * f, scale };
        }
        let f = BigInt::from(10u32).pow(self.scale - scale);
        Decimal { mantissa: div_round(&self.mantissa, &f), scale }
    }

    pub fn abs_diff(&self, other: &Decimal) -> Rational {
        let a = Rational::new(self.mantissa.clone(), BigInt::from(10u32).pow(self.scale));
        let b = Rational::new(other.mantissa.clone(), BigInt::from(10u32).pow(other.scale));
        (a - b).abs()
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let neg = self.mantissa.is_negative();
        let digits = self.mantissa.abs().to_string();
        let scale = self.scale as usize;
        let padded = if digits.len() <= scale {
            format!("{}{}", "0".repeat(scale + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int, frac) = padded.split_at(padded.len() - scale);
        if neg {
            f.write_str("-")?;
        }
        if scale == 0 {
            write!(f, "{int}")
        } else {
            write!(f, "{int}.{frac}")
        }
    }
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = a.abs().div_rem(&b.abs());
    let q = if &r * &two >= b.abs() { q + 1 } else { q };
    if a.is_negative() != b.is_negative() {
        -q
    } else {
        q
    }
}

/// Fixed-point numbers `v · 2^(−bits)`.
pub(crate) struct Fixed {
    pub bits: u64,
}

impl Fixed {
    pub fn one(&self) -> BigInt {
        BigInt::from(1) << self.bits
    }

    pub fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a * b) >> self.bits
    }

    pub fn from_rational(&self, q: &Rational) -> BigInt {
        (q.numer() << self.bits).div_floor(q.denom())
    }

    fn atan_inv(&self, x: u32) -> BigInt {
        let x = BigInt::from(x);
        let x2 = &x * &x;
        let mut term = self.one() / &x;
        let mut sum = BigInt::zero();
        let mut k = 0u32;
        while !term.is_zero() {
            let t = &term / BigInt::from(2 * k + 1);
            if k % 2 == 0 {
                sum += t;
            } else {
                sum -= t;
            }
            term /= &x2;
            k += 1;
        }
        sum
    }

    pub fn pi(&self) -> BigInt {
        self.atan_inv(5) * 16 - self.atan_inv(239) * 4
    }

    /// `(cos θ, sin θ)` for `θ = 2π·j/n`.
    pub fn cos_sin_turn(&self, j: i64, n: u64) -> (BigInt, BigInt) {
        let n = n as i64;
        let mut j = j.rem_euclid(n);
        if 2 * j > n {
            j -= n;
        }
        let theta = self.pi() * BigInt::from(2 * j) / BigInt::from(n);
        let t2 = self.mul(&theta, &theta);
        let (mut c, mut s) = (BigInt::zero(), BigInt::zero());
        let mut cterm = self.one();
        let mut sterm = theta;
        let mut m = 0i64;
        while !(cterm.is_zero() && sterm.is_zero()) {
            if m % 2 == 0 {
                c += &cterm;
                s += &sterm;
            } else {
                c -= &cterm;
                s -= &sterm;
            }
            cterm = self.mul(&cterm, &t2) / BigInt::from((2 * m + 1) * (2 * m + 2));
            sterm = self.mul(&sterm, &t2) / BigInt::from((2 * m + 2) * (2 * m + 3));
            m += 1;
        }
        (c, s)
    }

    pub fn to_decimal(&self, v: &BigInt, scale: u32) -> Decimal {
        let num = v * BigInt::from(10u32).pow(scale);
        Decimal { mantissa: div_round(&num, &self.one()), scale }
    }
}

/// Working precision in bits for `digits` decimal places with the given guard.
pub(crate) fn working_bits(digits: u32, guard: u64) -> u64 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil().to_u64().unwrap_or(0) + guard + 32
}
