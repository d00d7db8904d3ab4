//! Directed-rounding interval arithmetic in fixed point.
//!
//! Bound expressions of the form `C(w, i) · (3e)^√(2w)` mix integers with
//! transcendental values, and a comparison only counts as verified when it
//! holds against a rigorous enclosure.  Values here are intervals
//! `[lo, hi] / 2^128`, with every operation rounding the lower endpoint
//! toward `−∞` and the upper endpoint toward `+∞`, so the true real number
//! is always contained in the interval.  128 fractional bits leave a wide
//! margin for the few hundred directed roundings a bound evaluation needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Number of fractional bits in the fixed-point representation.
pub const FRACTION_BITS: u32 = 128;

/// Outcome of comparing a point value against an interval enclosure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    /// The relation holds for every value in the enclosure.
    Certain,
    /// The relation holds for some values in the enclosure but not all;
    /// the comparison cannot be decided at this precision.
    Borderline,
    /// The relation fails for every value in the enclosure.
    Refuted,
}

/// A closed interval `[lo, hi] / 2^FRACTION_BITS` enclosing a real number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
}

fn floor_shift(v: BigInt) -> BigInt {
    let d = BigInt::one() << FRACTION_BITS;
    v.div_floor(&d)
}

fn ceil_shift(v: BigInt) -> BigInt {
    let d = BigInt::one() << FRACTION_BITS;
    v.div_ceil(&d)
}

fn div_dir(v: &BigInt, d: &BigInt, up: bool) -> BigInt {
    if up {
        v.div_ceil(d)
    } else {
        v.div_floor(d)
    }
}

impl Interval {
    fn raw(lo: BigInt, hi: BigInt) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    /// The exact integer `n` as a point interval.
    pub fn from_integer<T: Into<BigInt>>(n: T) -> Self {
        let v: BigInt = n.into() << FRACTION_BITS;
        Interval::raw(v.clone(), v)
    }

    /// Scaled lower endpoint (`lo / 2^FRACTION_BITS` is the real bound).
    pub fn lower_scaled(&self) -> &BigInt {
        &self.lo
    }

    /// Scaled upper endpoint.
    pub fn upper_scaled(&self) -> &BigInt {
        &self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::raw(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::raw(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::raw(floor_shift(lo), ceil_shift(hi))
    }

    /// Multiplication by an exact integer.
    pub fn mul_integer<T: Into<BigInt>>(&self, n: T) -> Interval {
        let n: BigInt = n.into();
        let (a, b) = (&self.lo * &n, &self.hi * &n);
        if a <= b {
            Interval::raw(a, b)
        } else {
            Interval::raw(b, a)
        }
    }

    /// Enclosure of `√n` for a nonnegative integer `n`, tight to one ulp.
    pub fn sqrt_integer(n: u64) -> Interval {
        let scaled: BigInt = BigInt::from(n) << (2 * FRACTION_BITS);
        let root = scaled.sqrt();
        let exact = &root * &root == scaled;
        let hi = if exact { root.clone() } else { &root + 1 };
        Interval::raw(root, hi)
    }

    /// Enclosure of `exp(self)`; the argument must be nonnegative.
    pub fn exp(&self) -> Interval {
        assert!(
            !self.lo.is_negative(),
            "exp is only implemented for nonnegative arguments"
        );
        Interval::raw(exp_dir(&self.lo, false), exp_dir(&self.hi, true))
    }

    /// Enclosure of the natural logarithm of 3.
    pub fn ln3() -> Interval {
        // ln 3 = 2·atanh(1/2) = Σ_{k≥0} 4^{−k} / (2k+1); the tail after the
        // last nonzero fixed-point term is under one ulp.
        let one = BigInt::one() << FRACTION_BITS;
        let mut lo = BigInt::zero();
        let mut hi = BigInt::zero();
        let mut k = 0u32;
        loop {
            let num: BigInt = &one >> (2 * k);
            if num.is_zero() {
                break;
            }
            let den = BigInt::from(2 * k + 1);
            lo += div_dir(&num, &den, false);
            hi += div_dir(&num, &den, true);
            k += 1;
        }
        Interval::raw(lo, hi + 1)
    }

    /// Enclosure of `ln(3e) = 1 + ln 3`, the logarithm used by the
    /// exponential bound `(3e)^x = exp(x · ln(3e))`.
    pub fn ln_3e() -> Interval {
        Interval::from_integer(1).add(&Interval::ln3())
    }

    /// Is `self ≤ other` certain, refuted, or undecidable at this precision?
    pub fn classify_le(&self, other: &Interval) -> Certainty {
        if self.hi <= other.lo {
            Certainty::Certain
        } else if self.lo > other.hi {
            Certainty::Refuted
        } else {
            Certainty::Borderline
        }
    }

    /// Is the exact integer `x` at most this interval's value?
    pub fn classify_integer_le(&self, x: &BigInt) -> Certainty {
        let xs: BigInt = x.clone() << FRACTION_BITS;
        if xs <= self.lo {
            Certainty::Certain
        } else if xs > self.hi {
            Certainty::Refuted
        } else {
            Certainty::Borderline
        }
    }

    /// Decimal rendering of the upper endpoint, rounded up at `digits`
    /// fractional digits.
    pub fn decimal_upper(&self, digits: u32) -> String {
        render_decimal(&self.hi, digits, true)
    }

    /// Decimal rendering of the lower endpoint, rounded down.
    pub fn decimal_lower(&self, digits: u32) -> String {
        render_decimal(&self.lo, digits, false)
    }
}

/// Directed evaluation of `exp(x)` for a nonnegative scaled argument.
///
/// Terms `x^k/k!` are accumulated with per-operation directed rounding.
/// For the upper direction the computation stops once the term ratio is
/// at most 1/2 and the term is small, at which point the geometric tail is
/// dominated by one extra copy of the current term.
fn exp_dir(x: &BigInt, up: bool) -> BigInt {
    let one = BigInt::one() << FRACTION_BITS;
    let mut sum = one.clone();
    let mut term = one.clone();
    let mut k = 1u64;
    loop {
        let prod = &term * x;
        term = div_dir(&prod, &(BigInt::from(k) << FRACTION_BITS), up);
        if term.is_zero() {
            // With upward rounding a zero term means the true term is zero
            // (the argument is zero); either way the tail adds nothing.
            break;
        }
        sum += &term;
        let ratio_halved = (BigInt::from(k + 1) << FRACTION_BITS) >= 2 * x.clone();
        if ratio_halved && term < BigInt::from(1u64 << 16) {
            if up {
                // Remaining tail ≤ term · r/(1−r) ≤ term for ratio r ≤ 1/2.
                sum += &term + 1;
            }
            break;
        }
        k += 1;
        assert!(k < 100_000, "exp series failed to converge");
    }
    sum
}

fn render_decimal(v: &BigInt, digits: u32, up: bool) -> String {
    let pow10 = BigInt::from(10u32).pow(digits);
    let scaled = v * &pow10;
    let q = div_dir(&scaled, &(BigInt::one() << FRACTION_BITS), up);
    let neg = q.is_negative();
    let a = q.abs();
    let (int_part, frac_part) = a.div_rem(&pow10);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = digits as usize
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    /// Scaled enclosure of a positive decimal literal, treated as a
    /// truncation: the represented constant lies in `[lit, lit + 10^-d]`.
    fn scaled_bounds(decimal: &str) -> (BigInt, BigInt) {
        let (int_part, frac_part) = decimal.split_once('.').unwrap_or((decimal, ""));
        let digits = frac_part.len() as u32;
        let whole: BigInt = format!("{int_part}{frac_part}").parse().unwrap();
        let pow10 = BigInt::from(10u32).pow(digits);
        let lo = (whole.clone() << FRACTION_BITS).div_floor(&pow10);
        let hi = ((whole + 1u32) << FRACTION_BITS).div_ceil(&pow10);
        (lo, hi)
    }

    fn assert_encloses(iv: &Interval, decimal: &str) {
        let (lo, hi) = scaled_bounds(decimal);
        assert!(
            iv.lower_scaled() <= &hi && &lo <= iv.upper_scaled(),
            "interval [{}, {}] does not enclose {decimal}",
            iv.decimal_lower(40),
            iv.decimal_upper(40),
        );
    }

    fn width_below(iv: &Interval, bits: u32) -> bool {
        (iv.upper_scaled() - iv.lower_scaled()) <= (BigInt::one() << bits)
    }

    #[test]
    fn encloses_e_tightly() {
        let e = Interval::from_integer(1).exp();
        assert_encloses(&e, "2.71828182845904523536028747135266249775724709369995");
        // Width well under 2^-100 in value.
        assert!(width_below(&e, FRACTION_BITS - 100));
    }

    #[test]
    fn encloses_ln3_tightly() {
        let l = Interval::ln3();
        assert_encloses(&l, "1.09861228866810969139524523692252570464749055782274");
        assert!(width_below(&l, FRACTION_BITS - 100));
    }

    #[test]
    fn encloses_sqrt2() {
        let s = Interval::sqrt_integer(2);
        assert_encloses(&s, "1.41421356237309504880168872420969807856967187537694");
        assert!(width_below(&s, 1));
        // Perfect squares are exact points.
        let four = Interval::sqrt_integer(4);
        assert_eq!(four.lower_scaled(), four.upper_scaled());
    }

    #[test]
    fn exp_zero_is_one() {
        let z = Interval::from_integer(0).exp();
        assert_eq!(z, Interval::from_integer(1));
    }

    #[test]
    fn three_e_squared() {
        // (3e)^2 = exp(2·ln(3e)) = 66.50150489…
        let v = Interval::from_integer(2).mul(&Interval::ln_3e()).exp();
        assert_encloses(&v, "66.50150489037585204507384714517507031862");
        assert!(width_below(&v, FRACTION_BITS - 90));
    }

    #[test]
    fn comparisons_on_enclosures() {
        let v = Interval::from_integer(2).mul(&Interval::ln_3e()).exp();
        assert_eq!(
            v.classify_integer_le(&BigInt::from(66)),
            Certainty::Certain
        );
        assert_eq!(
            v.classify_integer_le(&BigInt::from(67)),
            Certainty::Refuted
        );
        let sqrt2 = Interval::sqrt_integer(2);
        let sqrt3 = Interval::sqrt_integer(3);
        assert_eq!(sqrt2.classify_le(&sqrt3), Certainty::Certain);
        assert_eq!(sqrt3.classify_le(&sqrt2), Certainty::Refuted);
        assert_eq!(sqrt2.classify_le(&sqrt2), Certainty::Borderline);
    }

    #[test]
    fn interval_algebra_directions() {
        let a = Interval::sqrt_integer(2);
        let b = a.sub(&Interval::from_integer(1)); // √2 − 1 > 0
        assert!(b.lower_scaled() > &BigInt::zero());
        let c = a.mul(&a); // encloses 2
        let two = BigInt::from_u8(2).unwrap() << FRACTION_BITS;
        assert!(c.lower_scaled() <= &two && &two <= c.upper_scaled());
        let d = a.mul_integer(-3);
        assert!(d.lower_scaled() < d.upper_scaled());
        assert_encloses(&d.mul_integer(-1), "4.24264068711928514640506617262909423570901562");
    }

    #[test]
    fn decimal_rendering() {
        let v = Interval::from_integer(1);
        assert_eq!(v.decimal_upper(3), "1.000");
        assert_eq!(v.decimal_lower(0), "1");
        let neg = Interval::from_integer(0).sub(&Interval::sqrt_integer(2));
        assert!(neg.decimal_upper(5).starts_with("-1.4142"));
    }
}
