//! Exact arithmetic in Q and in quadratic fields Q(sqrt(D)).
//!
//! Elements are stored as `a + b*sqrt(D)` with `a`, `b` arbitrary-precision
//! rationals, so every computation in the crate is exact: no floating point
//! appears anywhere. The rational field is carried as a degenerate case
//! (`b = 0`, no radicand) so curves over Q and over quadratic fields share
//! one code path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};

/// Arbitrary-precision rational, the coordinate type for field elements.
pub type Rat = num_rational::BigRational;

/// Convenience: exact rational from an `i64`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// A quadratic field Q(sqrt(D)) with `D` squarefree and distinct from 0, 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadField {
    d: i64,
}

impl QuadField {
    /// Constructs Q(sqrt(D)), validating that `d` is squarefree and defines
    /// a genuine quadratic extension.
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::DegenerateRadicand(d));
        }
        if !arith::is_squarefree_i64(d) {
            return Err(Error::NotSquarefree(d));
        }
        Ok(QuadField { d })
    }

    /// The squarefree radicand `D`.
    pub fn radicand(&self) -> i64 {
        self.d
    }

    /// Field discriminant: `D` when `D = 1 mod 4`, else `4D`.
    pub fn discriminant(&self) -> i64 {
        if self.omega_is_half() {
            self.d
        } else {
            4 * self.d
        }
    }

    /// True for imaginary quadratic fields (`D < 0`).
    pub fn is_imaginary(&self) -> bool {
        self.d < 0
    }

    /// True when the ring of integers is Z[(1+sqrt(D))/2] rather than
    /// Z[sqrt(D)].
    pub fn omega_is_half(&self) -> bool {
        self.d.rem_euclid(4) == 1
    }

    /// Trace of the integral-basis generator omega.
    pub fn omega_trace(&self) -> i64 {
        if self.omega_is_half() {
            1
        } else {
            0
        }
    }

    /// Norm of the integral-basis generator omega.
    pub fn omega_norm(&self) -> i64 {
        if self.omega_is_half() {
            (1 - self.d) / 4
        } else {
            -self.d
        }
    }
}

/// The base field of a computation: Q itself or a quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rational field Q.
    Rational,
    /// A quadratic field Q(sqrt(D)).
    Quadratic(QuadField),
}

impl Field {
    /// Constructs the field from an optional radicand (`None` = Q).
    pub fn from_radicand(d: Option<i64>) -> Result<Self> {
        match d {
            None => Ok(Field::Rational),
            Some(d) => Ok(Field::Quadratic(QuadField::new(d)?)),
        }
    }

    /// The radicand, or `None` over Q.
    pub fn radicand(&self) -> Option<i64> {
        match self {
            Field::Rational => None,
            Field::Quadratic(k) => Some(k.radicand()),
        }
    }

    /// The quadratic field, if this is one.
    pub fn quadratic(&self) -> Option<QuadField> {
        match self {
            Field::Rational => None,
            Field::Quadratic(k) => Some(*k),
        }
    }

    /// Merges the fields of two operands, coercing Q into a quadratic field
    /// where needed; distinct quadratic fields cannot be combined.
    pub fn unify(self, other: Field) -> Result<Field> {
        match (self, other) {
            (Field::Rational, f) => Ok(f),
            (f, Field::Rational) => Ok(f),
            (Field::Quadratic(k1), Field::Quadratic(k2)) => {
                if k1 == k2 {
                    Ok(Field::Quadratic(k1))
                } else {
                    Err(Error::FieldMismatch(k1.radicand(), k2.radicand()))
                }
            }
        }
    }
}

/// An exact element `a + b*sqrt(D)` of Q or of a quadratic field.
///
/// Invariant: over [`Field::Rational`] the coordinate `b` is zero.
#[derive(Debug, Clone)]
pub struct FieldElem {
    a: Rat,
    b: Rat,
    field: Field,
}

impl FieldElem {
    /// Element of a quadratic field from its rational coordinates.
    pub fn new(field: QuadField, a: Rat, b: Rat) -> Self {
        FieldElem {
            a,
            b,
            field: Field::Quadratic(field),
        }
    }

    /// Rational number as a field element of Q.
    pub fn from_rat(a: Rat) -> Self {
        FieldElem {
            a,
            b: Rat::zero(),
            field: Field::Rational,
        }
    }

    /// Integer as a field element of Q.
    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    /// Integer as a field element of Q.
    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rat(Rat::from_integer(n))
    }

    /// Zero of the given field.
    pub fn zero(field: Field) -> Self {
        FieldElem {
            a: Rat::zero(),
            b: Rat::zero(),
            field,
        }
    }

    /// One of the given field.
    pub fn one(field: Field) -> Self {
        FieldElem {
            a: Rat::one(),
            b: Rat::zero(),
            field,
        }
    }

    /// Integer `n` regarded as an element of `field`.
    pub fn int_in(field: Field, n: i64) -> Self {
        FieldElem {
            a: rat(n),
            b: Rat::zero(),
            field,
        }
    }

    /// sqrt(D) as an element of the quadratic field.
    pub fn sqrt_d(field: QuadField) -> Self {
        FieldElem::new(field, Rat::zero(), Rat::one())
    }

    /// The integral-basis generator: sqrt(D), or (1 + sqrt(D))/2 when
    /// `D = 1 mod 4`.
    pub fn omega(field: QuadField) -> Self {
        if field.omega_is_half() {
            FieldElem::new(field, Rat::new(BigInt::one(), BigInt::from(2)), Rat::new(BigInt::one(), BigInt::from(2)))
        } else {
            Self::sqrt_d(field)
        }
    }

    /// Rational coordinate on 1.
    pub fn coord_a(&self) -> &Rat {
        &self.a
    }

    /// Rational coordinate on sqrt(D).
    pub fn coord_b(&self) -> &Rat {
        &self.b
    }

    /// The element's field.
    pub fn field(&self) -> Field {
        self.field
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True for one.
    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the element lies in Q (possibly inside a quadratic field).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The value as a rational number, when it lies in Q.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Reinterpret the element inside `field` (Q embeds into any quadratic
    /// field; quadratic fields must match).
    pub fn coerce(&self, field: Field) -> Result<FieldElem> {
        let f = self.field.unify(field)?;
        Ok(FieldElem {
            a: self.a.clone(),
            b: self.b.clone(),
            field: f,
        })
    }

    fn binop(&self, other: &FieldElem) -> Result<Field> {
        self.field.unify(other.field)
    }

    /// Exact sum.
    pub fn add(&self, other: &FieldElem) -> Result<FieldElem> {
        let field = self.binop(other)?;
        Ok(FieldElem {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            field,
        })
    }

    /// Exact difference.
    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem> {
        let field = self.binop(other)?;
        Ok(FieldElem {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            field,
        })
    }

    /// Exact product; uses `sqrt(D)^2 = D`.
    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem> {
        let field = self.binop(other)?;
        let d = match field {
            Field::Rational => Rat::zero(),
            Field::Quadratic(k) => rat(k.radicand()),
        };
        Ok(FieldElem {
            a: &self.a * &other.a + (&self.b * &other.b) * &d,
            b: &self.a * &other.b + &self.b * &other.a,
            field,
        })
    }

    /// Additive inverse.
    pub fn neg(&self) -> FieldElem {
        FieldElem {
            a: -self.a.clone(),
            b: -self.b.clone(),
            field: self.field,
        }
    }

    /// Galois conjugate `a - b*sqrt(D)` (identity on Q).
    pub fn conj(&self) -> FieldElem {
        FieldElem {
            a: self.a.clone(),
            b: -self.b.clone(),
            field: self.field,
        }
    }

    /// Field norm `a^2 - D b^2` (for rationals, `a^2`).
    pub fn norm(&self) -> Rat {
        match self.field {
            Field::Rational => &self.a * &self.a,
            Field::Quadratic(k) => &self.a * &self.a - (&self.b * &self.b) * rat(k.radicand()),
        }
    }

    /// Field trace `2a`.
    pub fn trace(&self) -> Rat {
        &self.a * rat(2)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        debug_assert!(!n.is_zero());
        Ok(FieldElem {
            a: &self.a / &n,
            b: -(&self.b / &n),
            field: self.field,
        })
    }

    /// Exact quotient.
    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.mul(&other.inv()?)
    }

    /// Integer power (negative exponents invert).
    pub fn pow(&self, e: i64) -> Result<FieldElem> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = FieldElem::one(self.field);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Scale by a rational.
    pub fn scale(&self, c: &Rat) -> FieldElem {
        FieldElem {
            a: &self.a * c,
            b: &self.b * c,
            field: self.field,
        }
    }

    /// Coordinates `(c0, c1)` on the integral basis `(1, omega)`.
    ///
    /// Over Q this is `(a, 0)`.
    pub fn omega_coords(&self) -> (Rat, Rat) {
        match self.field {
            Field::Rational => (self.a.clone(), Rat::zero()),
            Field::Quadratic(k) => {
                if k.omega_is_half() {
                    (&self.a - &self.b, &self.b * rat(2))
                } else {
                    (self.a.clone(), self.b.clone())
                }
            }
        }
    }

    /// Element from coordinates on the integral basis `(1, omega)`.
    pub fn from_omega_coords(field: Field, c0: Rat, c1: Rat) -> FieldElem {
        match field {
            Field::Rational => {
                debug_assert!(c1.is_zero());
                FieldElem::from_rat(c0)
            }
            Field::Quadratic(k) => {
                if k.omega_is_half() {
                    let half = Rat::new(BigInt::one(), BigInt::from(2));
                    FieldElem::new(k, c0 + &c1 * &half, c1 * half)
                } else {
                    FieldElem::new(k, c0, c1)
                }
            }
        }
    }

    /// True when the element lies in the ring of integers (Z over Q).
    pub fn is_integral(&self) -> bool {
        let (c0, c1) = self.omega_coords();
        c0.is_integer() && c1.is_integer()
    }

    /// Least positive integer `n` with `n * self` integral.
    pub fn denominator(&self) -> BigInt {
        let (c0, c1) = self.omega_coords();
        c0.denom().lcm(c1.denom())
    }
}

use num_integer::Integer as _;

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        if self.a != other.a || self.b != other.b {
            return false;
        }
        // Equal coordinates: rational values compare equal across fields,
        // irrational ones require the same radicand.
        self.b.is_zero() || self.field == other.field
    }
}

impl Eq for FieldElem {}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let d = match self.field {
            Field::Quadratic(k) => k.radicand(),
            Field::Rational => unreachable!("rational elements have b = 0"),
        };
        let root = format!("sqrt({d})");
        let btxt = if self.b.is_one() {
            root
        } else if self.b == -Rat::one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{btxt}")
        } else if btxt.starts_with('-') {
            write!(f, "{}-{}", self.a, &btxt[1..])
        } else {
            write!(f, "{}+{}", self.a, btxt)
        }
    }
}

/// All roots of unity (= all units) of an imaginary quadratic field or Q.
///
/// Q and generic imaginary quadratic fields have `{1, -1}`; Q(i) has four
/// units and Q(sqrt(-3)) six. Real quadratic fields have infinite unit
/// groups and are rejected.
pub fn units_of(field: Field) -> Result<Vec<FieldElem>> {
    match field {
        Field::Rational => Ok(vec![FieldElem::from_int(1), FieldElem::from_int(-1)]),
        Field::Quadratic(k) if !k.is_imaginary() => Err(Error::InfiniteUnitGroup),
        Field::Quadratic(k) => {
            let gen = match k.radicand() {
                // i generates the four units of Q(i).
                -1 => FieldElem::sqrt_d(k),
                // (1 + sqrt(-3))/2 is a primitive sixth root of unity.
                -3 => FieldElem::new(
                    k,
                    Rat::new(BigInt::one(), BigInt::from(2)),
                    Rat::new(BigInt::one(), BigInt::from(2)),
                ),
                _ => FieldElem::int_in(field, -1),
            };
            let mut units = vec![FieldElem::one(field)];
            let mut u = gen.clone();
            while !u.is_one() {
                units.push(u.clone());
                u = u.mul(&gen)?;
            }
            Ok(units)
        }
    }
}

/// Exact n-th root of a rational, if one exists in Q.
pub fn rational_nth_root(x: &Rat, n: u32) -> Option<Rat> {
    assert!(n >= 1);
    if x.is_zero() {
        return Some(Rat::zero());
    }
    if x.is_negative() && n % 2 == 0 {
        return None;
    }
    let num = x.numer().abs();
    let den = x.denom().clone();
    let rn = num.nth_root(n);
    let rd = den.nth_root(n);
    if num != rn.clone().pow(n) || den != rd.clone().pow(n) {
        return None;
    }
    let sign = if x.is_negative() { -rn } else { rn };
    Some(Rat::new(sign, rd))
}

/// Exact n-th root of `x` within its own field, if one exists.
///
/// Over Q this is a perfect-power test on numerator and denominator. Over an
/// imaginary quadratic field the ideal `(x)` is factored, its n-th root
/// located by a principal-generator search, and the finitely many units then
/// decide existence. Real quadratic fields (infinite unit group) are
/// supported only for rational inputs.
pub fn nth_power_root(x: &FieldElem, n: u32) -> Result<Option<FieldElem>> {
    assert!(n >= 1);
    if x.is_zero() {
        return Ok(Some(x.clone()));
    }
    match x.field() {
        Field::Rational => Ok(rational_nth_root(x.as_rat().unwrap(), n).map(FieldElem::from_rat)),
        Field::Quadratic(k) if !k.is_imaginary() => {
            // Only the rational-valued case can be decided without a unit
            // search: candidates are r or r*sqrt(D) with r rational.
            let Some(v) = x.as_rat() else {
                return Err(Error::UnsupportedField(format!(
                    "n-th roots of irrational elements of Q(sqrt({}))",
                    k.radicand()
                )));
            };
            if let Some(r) = rational_nth_root(v, n) {
                return Ok(Some(FieldElem::from_rat(r).coerce(x.field())?));
            }
            if n % 2 == 0 {
                let scaled = v / rat(k.radicand()).pow((n / 2) as i32);
                if let Some(r) = rational_nth_root(&scaled, n) {
                    let root = FieldElem::from_rat(r).mul(&FieldElem::sqrt_d(k))?;
                    return Ok(Some(root));
                }
            }
            Ok(None)
        }
        Field::Quadratic(_) => crate::ideals::nth_power_root_imaginary(x, n),
    }
}

// ---------------------------------------------------------------------------
// Parsing and serialisation
// ---------------------------------------------------------------------------

fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        Ok(Rat::new(n, d))
    } else {
        let n = BigInt::from_str(s).map_err(|_| bad())?;
        Ok(Rat::from_integer(n))
    }
}

impl FieldElem {
    /// Parses the expression grammar `a/b + c/e*sqrtD` in a known field.
    ///
    /// Terms are separated by `+`/`-`; each term is a rational, `sqrt(D)`
    /// (parentheses optional, radicand optional when the field fixes it), or
    /// a product `rational*sqrt(D)`. Examples: `16`, `-1/2`, `4+sqrt(-33)`,
    /// `1/2-5/7*sqrt-1`.
    pub fn parse(input: &str, field: Field) -> Result<FieldElem> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty element expression".into()));
        }
        let mut total = FieldElem::zero(field);
        let mut term = String::new();
        let mut chars = s.chars().peekable();
        let mut terms: Vec<String> = Vec::new();
        while let Some(c) = chars.next() {
            match c {
                '+' | '-' if !term.is_empty() && !term.ends_with('/') && !term.ends_with('*') && !term.ends_with('(') && !term.ends_with("sqrt") => {
                    terms.push(term.clone());
                    term.clear();
                    if c == '-' {
                        term.push('-');
                    }
                }
                _ => term.push(c),
            }
        }
        if !term.is_empty() {
            terms.push(term);
        }
        for t in terms {
            total = total.add(&Self::parse_term(&t, field)?)?;
        }
        Ok(total)
    }

    fn parse_term(t: &str, field: Field) -> Result<FieldElem> {
        let (coeff, root) = match t.find("sqrt") {
            None => (t, None),
            Some(idx) => {
                let mut rad = &t[idx + 4..];
                rad = rad.strip_prefix('(').unwrap_or(rad);
                rad = rad.strip_suffix(')').unwrap_or(rad);
                (&t[..idx], Some(rad))
            }
        };
        let c = match coeff {
            "" | "+" => Rat::one(),
            "-" => -Rat::one(),
            c => parse_rat(c.strip_suffix('*').unwrap_or(c))?,
        };
        match root {
            None => FieldElem::from_rat(c).coerce(field),
            Some(rad) => {
                let k = match field {
                    Field::Rational => {
                        return Err(Error::Parse("sqrt term in a rational context".into()))
                    }
                    Field::Quadratic(k) => k,
                };
                if !rad.is_empty() {
                    let d: i64 = rad
                        .parse()
                        .map_err(|_| Error::Parse(format!("invalid radicand '{rad}'")))?;
                    if d != k.radicand() {
                        return Err(Error::Parse(format!(
                            "radicand {d} does not match field sqrt({})",
                            k.radicand()
                        )));
                    }
                }
                Ok(FieldElem::new(k, Rat::zero(), c))
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ElemWire {
    a: String,
    b: String,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    d: Option<i64>,
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ElemWire {
            a: self.a.to_string(),
            b: self.b.to_string(),
            d: self.field.radicand(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = ElemWire::deserialize(de)?;
        let field = Field::from_radicand(wire.d).map_err(D::Error::custom)?;
        let a = parse_rat(&wire.a).map_err(D::Error::custom)?;
        let b = parse_rat(&wire.b).map_err(D::Error::custom)?;
        if matches!(field, Field::Rational) && !b.is_zero() {
            return Err(D::Error::custom("rational element with nonzero b"));
        }
        Ok(FieldElem { a, b, field })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(d: i64) -> QuadField {
        QuadField::new(d).unwrap()
    }

    #[test]
    fn field_construction_validates() {
        assert!(QuadField::new(-33).is_ok());
        assert!(QuadField::new(10).is_ok());
        assert_eq!(QuadField::new(12), Err(Error::NotSquarefree(12)));
        assert_eq!(QuadField::new(-9), Err(Error::NotSquarefree(-9)));
        assert_eq!(QuadField::new(0), Err(Error::DegenerateRadicand(0)));
        assert_eq!(QuadField::new(1), Err(Error::DegenerateRadicand(1)));
    }

    #[test]
    fn discriminants() {
        assert_eq!(q(-1).discriminant(), -4);
        assert_eq!(q(-3).discriminant(), -3);
        assert_eq!(q(-33).discriminant(), -132);
        assert_eq!(q(10).discriminant(), 40);
        assert_eq!(q(5).discriminant(), 5);
    }

    #[test]
    fn zeta3_arithmetic() {
        // zeta3 = (-1 + sqrt(-3))/2; (zeta3 + 2)^2 = 3*zeta3 + 3 and its norm is 3.
        let k = q(-3);
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let zeta = FieldElem::new(k, -half.clone(), half);
        let x = zeta.add(&FieldElem::from_int(2)).unwrap();
        let sq = x.mul(&x).unwrap();
        let expected = zeta.scale(&rat(3)).add(&FieldElem::from_int(3)).unwrap();
        assert_eq!(sq, expected);
        assert_eq!(x.norm(), rat(3));
        assert_eq!(x.trace(), rat(3));
    }

    #[test]
    fn conjugation_and_norm() {
        let k = q(-33);
        let x = FieldElem::new(k, rat(4), rat(1)); // 4 + sqrt(-33)
        assert_eq!(x.conj(), FieldElem::new(k, rat(4), rat(-1)));
        assert_eq!(x.norm(), rat(49));
        let prod = x.mul(&x.conj()).unwrap();
        assert_eq!(prod, FieldElem::int_in(Field::Quadratic(k), 49));
    }

    #[test]
    fn rational_coercion_in_binops() {
        let k = q(-1);
        let i = FieldElem::sqrt_d(k);
        let sum = i.add(&FieldElem::from_int(3)).unwrap();
        assert_eq!(sum, FieldElem::new(k, rat(3), rat(1)));
        let k2 = q(-3);
        let z = FieldElem::sqrt_d(k2);
        assert_eq!(i.add(&z), Err(Error::FieldMismatch(-1, -3)));
    }

    #[test]
    fn division_and_pow() {
        let k = q(-33);
        let x = FieldElem::new(k, rat(4), rat(1));
        let y = x.div(&x).unwrap();
        assert!(y.is_one());
        assert_eq!(x.pow(-2).unwrap(), x.mul(&x).unwrap().inv().unwrap());
        assert_eq!(
            FieldElem::zero(Field::Rational).inv(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn integrality_uses_the_right_basis() {
        // In Q(sqrt(-3)) the element (1 + sqrt(-3))/2 is integral.
        let k = q(-3);
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let omega = FieldElem::new(k, half.clone(), half.clone());
        assert!(omega.is_integral());
        // But (1 + sqrt(-33))/2 is not: -33 = 3 mod 4.
        let k2 = q(-33);
        let x = FieldElem::new(k2, half.clone(), half);
        assert!(!x.is_integral());
        assert!(FieldElem::new(k2, rat(4), rat(-1)).is_integral());
        assert!(!FieldElem::new(k2, Rat::new(BigInt::from(1), BigInt::from(3)), rat(0)).is_integral());
    }

    #[test]
    fn omega_coordinate_roundtrip() {
        for d in [-1i64, -3, -33, 5, 10] {
            let k = q(d);
            let x = FieldElem::new(k, Rat::new(BigInt::from(7), BigInt::from(2)), rat(-3));
            let (c0, c1) = x.omega_coords();
            let back = FieldElem::from_omega_coords(Field::Quadratic(k), c0, c1);
            assert_eq!(back, x);
        }
    }

    #[test]
    fn unit_groups() {
        let u1 = units_of(Field::Rational).unwrap();
        assert_eq!(u1.len(), 2);
        let u4 = units_of(Field::Quadratic(q(-1))).unwrap();
        assert_eq!(u4.len(), 4);
        let u6 = units_of(Field::Quadratic(q(-3))).unwrap();
        assert_eq!(u6.len(), 6);
        let u2 = units_of(Field::Quadratic(q(-33))).unwrap();
        assert_eq!(u2.len(), 2);
        assert_eq!(
            units_of(Field::Quadratic(q(10))),
            Err(Error::InfiniteUnitGroup)
        );
        // Closure under multiplication and inverses (group axioms).
        for units in [&u1, &u4, &u6, &u2] {
            for x in units.iter() {
                assert!(units.contains(&x.inv().unwrap()));
                for y in units.iter() {
                    assert!(units.contains(&x.mul(y).unwrap()));
                }
            }
        }
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_nth_root(&rat(4096), 12), Some(rat(2)));
        assert_eq!(rational_nth_root(&rat(-27), 3), Some(rat(-3)));
        assert_eq!(rational_nth_root(&rat(-4), 2), None);
        assert_eq!(
            rational_nth_root(&Rat::new(BigInt::from(8), BigInt::from(27)), 3),
            Some(Rat::new(BigInt::from(2), BigInt::from(3)))
        );
        assert_eq!(rational_nth_root(&rat(50), 2), None);
    }

    #[test]
    fn nth_root_over_q_and_real_quadratic() {
        let x = FieldElem::from_int(729);
        assert_eq!(nth_power_root(&x, 6).unwrap(), Some(FieldElem::from_int(3)));
        assert_eq!(nth_power_root(&FieldElem::from_int(-1), 12).unwrap(), None);
        // In Q(sqrt(10)): 10 is a square (sqrt(10) itself), 40 = (2 sqrt(10))^2.
        let k = q(10);
        let ten = FieldElem::int_in(Field::Quadratic(k), 10);
        let root = nth_power_root(&ten, 2).unwrap().unwrap();
        assert_eq!(root.mul(&root).unwrap(), ten);
        let forty = FieldElem::int_in(Field::Quadratic(k), 40);
        let root = nth_power_root(&forty, 2).unwrap().unwrap();
        assert_eq!(root.mul(&root).unwrap(), forty);
        assert_eq!(nth_power_root(&FieldElem::int_in(Field::Quadratic(k), 7), 2).unwrap(), None);
        let irr = FieldElem::new(k, rat(1), rat(1));
        assert!(matches!(
            nth_power_root(&irr, 2),
            Err(Error::UnsupportedField(_))
        ));
    }

    #[test]
    fn parse_grammar() {
        let k = Field::Quadratic(q(-33));
        assert_eq!(
            FieldElem::parse("4+sqrt(-33)", k).unwrap(),
            FieldElem::new(q(-33), rat(4), rat(1))
        );
        assert_eq!(
            FieldElem::parse("-1/2 - 5/7*sqrt-33", k).unwrap(),
            FieldElem::new(
                q(-33),
                Rat::new(BigInt::from(-1), BigInt::from(2)),
                Rat::new(BigInt::from(-5), BigInt::from(7))
            )
        );
        assert_eq!(
            FieldElem::parse("sqrt", k).unwrap(),
            FieldElem::sqrt_d(q(-33))
        );
        assert_eq!(
            FieldElem::parse("16", Field::Rational).unwrap(),
            FieldElem::from_int(16)
        );
        assert!(FieldElem::parse("sqrt(-1)", k).is_err());
        assert!(FieldElem::parse("sqrt(-1)", Field::Rational).is_err());
        assert!(FieldElem::parse("1/0", Field::Rational).is_err());
    }

    #[test]
    fn serde_roundtrip() {
        let k = q(-33);
        let x = FieldElem::new(k, Rat::new(BigInt::from(-3), BigInt::from(2)), rat(7));
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"a":"-3/2","b":"7","D":-33}"#);
        let back: FieldElem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        let r = FieldElem::from_int(-5);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"a":"-5","b":"0"}"#);
        let back: FieldElem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn display_forms() {
        let k = q(-33);
        assert_eq!(FieldElem::new(k, rat(4), rat(-1)).to_string(), "4-sqrt(-33)");
        assert_eq!(FieldElem::new(k, rat(0), rat(2)).to_string(), "2*sqrt(-33)");
        assert_eq!(FieldElem::from_int(7).to_string(), "7");
    }
}
