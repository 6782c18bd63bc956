//! Weierstrass models of elliptic curves over Q and quadratic fields:
//! standard invariants, coordinate changes `[u, r, s, w]` (with composition
//! and inversion), quadratic twists, short forms, and exact isomorphism
//! tests over the base field.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numeric::{rat, Field, FieldElem, Rat};

/// A (long) Weierstrass equation
/// `y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeierstrassModel {
    field: Field,
    a: [FieldElem; 5],
}

/// The attached quantities `b2, b4, b6, b8, c4, c6` and the discriminant.
#[derive(Debug, Clone, PartialEq)]
pub struct Invariants {
    pub b2: FieldElem,
    pub b4: FieldElem,
    pub b6: FieldElem,
    pub b8: FieldElem,
    pub c4: FieldElem,
    pub c6: FieldElem,
    pub disc: FieldElem,
}

impl Invariants {
    /// The j-invariant `c4^3 / disc`; fails on singular models.
    pub fn j(&self) -> Result<FieldElem> {
        if self.disc.is_zero() {
            return Err(Error::SingularModel);
        }
        self.c4.pow(3)?.div(&self.disc)
    }
}

impl WeierstrassModel {
    /// Builds a model from `[a1, a2, a3, a4, a6]`, coercing every
    /// coefficient into a common field containing `field`.
    pub fn new(field: Field, a: [FieldElem; 5]) -> Result<WeierstrassModel> {
        let mut common = field;
        for ai in &a {
            common = common.unify(ai.field())?;
        }
        let coerced: Vec<FieldElem> = a
            .iter()
            .map(|ai| ai.coerce(common))
            .collect::<Result<_>>()?;
        Ok(WeierstrassModel {
            field: common,
            a: coerced.try_into().expect("five coefficients"),
        })
    }

    /// Model over Q from integer coefficients.
    pub fn from_ints(a: [i64; 5]) -> WeierstrassModel {
        let elems = a.map(FieldElem::from_int);
        WeierstrassModel::new(Field::Rational, elems).expect("rational coefficients agree")
    }

    /// Short model `y^2 = x^3 + A x + B`.
    pub fn short(field: Field, a4: FieldElem, a6: FieldElem) -> Result<WeierstrassModel> {
        let z = FieldElem::zero(field);
        WeierstrassModel::new(field, [z.clone(), z.clone(), z, a4, a6])
    }

    /// Parses `"a1,a2,a3,a4,a6"` with each entry in the element grammar.
    pub fn parse_list(input: &str, field: Field) -> Result<WeierstrassModel> {
        let parts: Vec<&str> = input.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::Parse(format!(
                "expected five comma-separated coefficients, got {}",
                parts.len()
            )));
        }
        let elems: Vec<FieldElem> = parts
            .iter()
            .map(|s| FieldElem::parse(s.trim(), field))
            .collect::<Result<_>>()?;
        WeierstrassModel::new(field, elems.try_into().expect("five coefficients"))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn a1(&self) -> &FieldElem {
        &self.a[0]
    }

    pub fn a2(&self) -> &FieldElem {
        &self.a[1]
    }

    pub fn a3(&self) -> &FieldElem {
        &self.a[2]
    }

    pub fn a4(&self) -> &FieldElem {
        &self.a[3]
    }

    pub fn a6(&self) -> &FieldElem {
        &self.a[4]
    }

    pub fn coefficients(&self) -> &[FieldElem; 5] {
        &self.a
    }

    /// True when every coefficient lies in the ring of integers.
    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|ai| ai.is_integral())
    }

    /// Exact `b`-, `c`- and discriminant invariants.
    pub fn invariants(&self) -> Invariants {
        let [a1, a2, a3, a4, a6] = &self.a;
        let m = |x: &FieldElem, k: i64| x.scale(&rat(k));
        let b2 = a1.mul(a1).and_then(|s| s.add(&m(a2, 4))).unwrap();
        let b4 = m(a4, 2).add(&a1.mul(a3).unwrap()).unwrap();
        let b6 = a3.mul(a3).and_then(|s| s.add(&m(a6, 4))).unwrap();
        // b8 = a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2.
        let b8 = a1
            .mul(a1)
            .and_then(|s| s.mul(a6))
            .and_then(|s| s.add(&m(&a2.mul(a6)?, 4)))
            .and_then(|s| s.sub(&a1.mul(a3)?.mul(a4)?))
            .and_then(|s| s.add(&a2.mul(&a3.mul(a3)?)?))
            .and_then(|s| s.sub(&a4.mul(a4)?))
            .unwrap();
        let c4 = b2.mul(&b2).and_then(|s| s.sub(&m(&b4, 24))).unwrap();
        // c6 = -b2^3 + 36 b2 b4 - 216 b6.
        let c6 = b2
            .pow(3)
            .map(|s| s.neg())
            .and_then(|s| s.add(&m(&b2.mul(&b4)?, 36)))
            .and_then(|s| s.sub(&m(&b6, 216)))
            .unwrap();
        // disc = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
        let disc = b2
            .mul(&b2)
            .and_then(|s| s.mul(&b8))
            .map(|s| s.neg())
            .and_then(|s| s.sub(&m(&b4.pow(3)?, 8)))
            .and_then(|s| s.sub(&m(&b6.mul(&b6)?, 27)))
            .and_then(|s| s.add(&m(&b2.mul(&b4)?.mul(&b6)?, 9)))
            .unwrap();
        if cfg!(debug_assertions) {
            // 4 b8 = b2 b6 - b4^2 and 1728 disc = c4^3 - c6^2.
            let lhs = m(&b8, 4);
            let rhs = b2.mul(&b6).and_then(|s| s.sub(&b4.mul(&b4)?)).unwrap();
            debug_assert!(lhs == rhs);
            let lhs = m(&disc, 1728);
            let rhs = c4.pow(3).and_then(|s| s.sub(&c6.mul(&c6)?)).unwrap();
            debug_assert!(lhs == rhs);
        }
        Invariants {
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
        }
    }

    /// The discriminant alone.
    pub fn discriminant(&self) -> FieldElem {
        self.invariants().disc
    }

    /// True when the discriminant vanishes.
    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// The j-invariant; fails on singular models.
    pub fn j_invariant(&self) -> Result<FieldElem> {
        self.invariants().j()
    }

    /// Applies the coordinate change `x = u^2 x' + r`, `y = u^3 y' + u^2 s x' + w`.
    pub fn transform(&self, tau: &Transformation) -> Result<WeierstrassModel> {
        let field = self.field.unify(tau.field())?;
        let [a1, a2, a3, a4, a6] = &self.a;
        let (u, r, s, w) = (&tau.u, &tau.r, &tau.s, &tau.w);
        let m = |x: &FieldElem, k: i64| x.scale(&rat(k));
        let ui = u.inv()?;
        let u2 = ui.mul(&ui)?;
        let u3 = u2.mul(&ui)?;
        let u4 = u2.mul(&u2)?;
        let u6 = u4.mul(&u2)?;
        // a1' = (a1 + 2s)/u
        let b1 = a1.add(&m(s, 2))?.mul(&ui)?;
        // a2' = (a2 - s a1 + 3r - s^2)/u^2
        let b2 = a2
            .sub(&s.mul(a1)?)?
            .add(&m(r, 3))?
            .sub(&s.mul(s)?)?
            .mul(&u2)?;
        // a3' = (a3 + r a1 + 2w)/u^3
        let b3 = a3.add(&r.mul(a1)?)?.add(&m(w, 2))?.mul(&u3)?;
        // a4' = (a4 - s a3 + 2 r a2 - (w + r s) a1 + 3 r^2 - 2 s w)/u^4
        let b4 = a4
            .sub(&s.mul(a3)?)?
            .add(&m(&r.mul(a2)?, 2))?
            .sub(&w.add(&r.mul(s)?)?.mul(a1)?)?
            .add(&m(&r.mul(r)?, 3))?
            .sub(&m(&s.mul(w)?, 2))?
            .mul(&u4)?;
        // a6' = (a6 + r a4 + r^2 a2 + r^3 - w a3 - w^2 - r w a1)/u^6
        let b6 = a6
            .add(&r.mul(a4)?)?
            .add(&r.mul(r)?.mul(a2)?)?
            .add(&r.pow(3)?)?
            .sub(&w.mul(a3)?)?
            .sub(&w.mul(w)?)?
            .sub(&r.mul(w)?.mul(a1)?)?
            .mul(&u6)?;
        WeierstrassModel::new(field, [b1, b2, b3, b4, b6])
    }

    /// A short model `y^2 = x^3 + A x + B` of the same curve, together with
    /// the coordinate change that produces it.
    pub fn short_form(&self) -> Result<(WeierstrassModel, Transformation)> {
        let inv = self.invariants();
        let minus_half = Rat::new((-1).into(), 2.into());
        let s = self.a1().scale(&minus_half);
        let r = inv.b2.scale(&Rat::new((-1).into(), 12.into()));
        let w = self.a3().scale(&minus_half).add(&s.mul(&r)?)?;
        let tau = Transformation::new(FieldElem::one(self.field), r, s, w)?;
        let short = self.transform(&tau)?;
        debug_assert!(short.a1().is_zero() && short.a2().is_zero() && short.a3().is_zero());
        Ok((short, tau))
    }

    /// The quadratic twist by `d`: a short model with `A, B` scaled by
    /// `d^2, d^3`. Twisting by a square gives an isomorphic curve.
    pub fn quadratic_twist(&self, d: &FieldElem) -> Result<WeierstrassModel> {
        if d.is_zero() {
            return Err(Error::ZeroTwist);
        }
        let field = self.field.unify(d.field())?;
        let (short, _) = self.coerce(field)?.short_form()?;
        let a4 = short.a4().mul(&d.mul(d)?)?;
        let a6 = short.a6().mul(&d.pow(3)?)?;
        WeierstrassModel::short(field, a4, a6)
    }

    /// Re-expresses the model over a larger field.
    pub fn coerce(&self, field: Field) -> Result<WeierstrassModel> {
        let target = self.field.unify(field)?;
        let a: Vec<FieldElem> = self
            .a
            .iter()
            .map(|ai| ai.coerce(target))
            .collect::<Result<_>>()?;
        Ok(WeierstrassModel {
            field: target,
            a: a.try_into().expect("five coefficients"),
        })
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}]",
            self.a[0], self.a[1], self.a[2], self.a[3], self.a[4]
        )
    }
}

impl Serialize for WeierstrassModel {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(2))?;
        map.serialize_entry("field", &self.field.radicand())?;
        map.serialize_entry("a", &self.a.as_slice())?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for WeierstrassModel {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            field: Option<i64>,
            a: Vec<FieldElem>,
        }
        let wire = Wire::deserialize(de)?;
        let field = Field::from_radicand(wire.field).map_err(serde::de::Error::custom)?;
        let a: [FieldElem; 5] = wire
            .a
            .try_into()
            .map_err(|_| serde::de::Error::custom("expected five coefficients"))?;
        WeierstrassModel::new(field, a).map_err(serde::de::Error::custom)
    }
}

/// A change of Weierstrass coordinates `[u, r, s, w]` with `u` invertible.
#[derive(Debug, Clone, PartialEq)]
pub struct Transformation {
    u: FieldElem,
    r: FieldElem,
    s: FieldElem,
    w: FieldElem,
}

impl Transformation {
    pub fn new(u: FieldElem, r: FieldElem, s: FieldElem, w: FieldElem) -> Result<Transformation> {
        if u.is_zero() {
            return Err(Error::ZeroScale);
        }
        let field = u.field().unify(r.field())?.unify(s.field())?.unify(w.field())?;
        Ok(Transformation {
            u: u.coerce(field)?,
            r: r.coerce(field)?,
            s: s.coerce(field)?,
            w: w.coerce(field)?,
        })
    }

    pub fn identity(field: Field) -> Transformation {
        Transformation {
            u: FieldElem::one(field),
            r: FieldElem::zero(field),
            s: FieldElem::zero(field),
            w: FieldElem::zero(field),
        }
    }

    /// Rescaling `[u, 0, 0, 0]`.
    pub fn scaling(u: FieldElem) -> Result<Transformation> {
        let field = u.field();
        Transformation::new(
            u,
            FieldElem::zero(field),
            FieldElem::zero(field),
            FieldElem::zero(field),
        )
    }

    pub fn u(&self) -> &FieldElem {
        &self.u
    }

    pub fn r(&self) -> &FieldElem {
        &self.r
    }

    pub fn s(&self) -> &FieldElem {
        &self.s
    }

    pub fn w(&self) -> &FieldElem {
        &self.w
    }

    pub fn field(&self) -> Field {
        self.u.field()
    }

    /// The composite "apply `self`, then `next`".
    pub fn compose(&self, next: &Transformation) -> Result<Transformation> {
        let (u1, r1, s1, w1) = (&self.u, &self.r, &self.s, &self.w);
        let (u2, r2, s2, w2) = (&next.u, &next.r, &next.s, &next.w);
        let u1sq = u1.mul(u1)?;
        let u = u1.mul(u2)?;
        let r = u1sq.mul(r2)?.add(r1)?;
        let s = u1.mul(s2)?.add(s1)?;
        let w = u1sq
            .mul(u1)?
            .mul(w2)?
            .add(&s1.mul(&u1sq)?.mul(r2)?)?
            .add(w1)?;
        Transformation::new(u, r, s, w)
    }

    /// The inverse coordinate change.
    pub fn inverse(&self) -> Result<Transformation> {
        let ui = self.u.inv()?;
        let u2 = ui.mul(&ui)?;
        let u3 = u2.mul(&ui)?;
        let r = self.r.mul(&u2)?.neg();
        let s = self.s.mul(&ui)?.neg();
        let w = self.r.mul(&self.s)?.sub(&self.w)?.mul(&u3)?;
        Transformation::new(ui, r, s, w)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.u, self.r, self.s, self.w)
    }
}

/// Whether two nonsingular models define isomorphic curves over their
/// common base field.
///
/// Away from `j = 0` and `j = 1728` the scaling `u^2` is uniquely
/// determined by the `c`-invariants, so the test is a single exact square
/// check; the special j-invariants need a sixth resp. fourth root.
pub fn is_isomorphic(e1: &WeierstrassModel, e2: &WeierstrassModel) -> Result<bool> {
    let field = e1.field().unify(e2.field())?;
    let i1 = e1.coerce(field)?.invariants();
    let i2 = e2.coerce(field)?.invariants();
    if i1.disc.is_zero() || i2.disc.is_zero() {
        return Err(Error::SingularModel);
    }
    if i1.j()? != i2.j()? {
        return Ok(false);
    }
    if i1.c4.is_zero() {
        // j = 0: need u^6 = c6/c6'.
        let ratio = i1.c6.div(&i2.c6)?;
        return Ok(crate::numeric::nth_power_root(&ratio, 6)?.is_some());
    }
    if i1.c6.is_zero() {
        // j = 1728: need u^4 = c4/c4'.
        let ratio = i1.c4.div(&i2.c4)?;
        return Ok(crate::numeric::nth_power_root(&ratio, 4)?.is_some());
    }
    // Generic j: u^2 = (c6 c4')/(c6' c4) is forced; isomorphy is exactly
    // this value being a square in the field.
    let u2 = i1.c6.mul(&i2.c4)?.div(&i2.c6.mul(&i1.c4)?)?;
    debug_assert!(u2.mul(&u2).unwrap() == i1.c4.div(&i2.c4).unwrap());
    debug_assert!(u2.pow(3).unwrap() == i1.c6.div(&i2.c6).unwrap());
    Ok(crate::numeric::nth_power_root(&u2, 2)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, QuadField};
    use num_bigint::BigInt;

    fn k10() -> Field {
        Field::Quadratic(QuadField::new(10).unwrap())
    }

    fn e10(a: i64, b: i64) -> FieldElem {
        FieldElem::new(QuadField::new(10).unwrap(), rat(a), rat(b))
    }

    #[test]
    fn invariants_of_a_rank_one_rational_curve() {
        // y^2 + y = x^3 - x: disc = 37, c4 = 48, j = 110592/37.
        let e = WeierstrassModel::from_ints([0, 0, 1, -1, 0]);
        let inv = e.invariants();
        assert_eq!(inv.disc, FieldElem::from_int(37));
        assert_eq!(inv.c4, FieldElem::from_int(48));
        let j = inv.j().unwrap();
        assert_eq!(
            j.as_rat().unwrap(),
            &Rat::new(BigInt::from(110592), BigInt::from(37))
        );
    }

    #[test]
    fn transform_matches_worked_example_over_q_sqrt_10() {
        // E: y^2 + sqrt(10) xy = x^3 + sqrt(10) x^2
        //      + (1263 sqrt(10) - 8032) x + 62956 sqrt(10) - 305877,
        // transformed by [sqrt(10)/5, -(sqrt(10)+4)/5, -2 sqrt(10)/5,
        // 11 sqrt(10)/25 + 7/5].
        let e = WeierstrassModel::new(
            k10(),
            [
                e10(0, 1),
                e10(0, 1),
                e10(0, 0),
                e10(-8032, 1263),
                e10(-305877, 62956),
            ],
        )
        .unwrap();
        assert_eq!(e.discriminant(), e10(-38656, -12224));
        let fifth = |x: FieldElem| x.scale(&Rat::new(1.into(), 5.into()));
        let tau = Transformation::new(
            fifth(e10(0, 1)),
            fifth(e10(-4, -1)),
            fifth(e10(0, -2)),
            fifth(e10(7, 0).add(&fifth(e10(0, 11))).unwrap()),
        )
        .unwrap();
        let te = e.transform(&tau).unwrap();
        let expected = WeierstrassModel::new(
            k10(),
            [
                e10(1, 0),
                e10(0, 1),
                e10(1, 1),
                e10(-50231, 7883),
                e10(-4718332, 993021),
            ],
        )
        .unwrap();
        assert_eq!(te, expected);
        assert_eq!(te.discriminant(), e10(-9437500, -2984375));
        // Round trip through the inverse.
        let back = te.transform(&tau.inverse().unwrap()).unwrap();
        assert_eq!(back, e);
        // disc scales by u^-12.
        let u12 = tau.u().pow(12).unwrap();
        assert_eq!(
            te.discriminant().mul(&u12).unwrap(),
            e.discriminant()
        );
    }

    #[test]
    fn composition_agrees_with_sequential_transforms() {
        let e = WeierstrassModel::from_ints([1, -2, 3, -4, 6]);
        let t1 = Transformation::new(
            FieldElem::from_rat(Rat::new(2.into(), 3.into())),
            FieldElem::from_int(-1),
            FieldElem::from_int(2),
            FieldElem::from_rat(Rat::new(1.into(), 2.into())),
        )
        .unwrap();
        let t2 = Transformation::new(
            FieldElem::from_int(3),
            FieldElem::from_rat(Rat::new(BigInt::from(-1), 4.into())),
            FieldElem::from_int(0),
            FieldElem::from_int(5),
        )
        .unwrap();
        let sequential = e.transform(&t1).unwrap().transform(&t2).unwrap();
        let composed = e.transform(&t1.compose(&t2).unwrap()).unwrap();
        assert_eq!(sequential, composed);
        let ident = t1.compose(&t1.inverse().unwrap()).unwrap();
        assert_eq!(ident, Transformation::identity(Field::Rational));
    }

    #[test]
    fn short_form_has_expected_invariants() {
        let e = WeierstrassModel::from_ints([1, -2, 3, -4, 6]);
        let (short, tau) = e.short_form().unwrap();
        assert!(tau.u().is_one());
        let inv = e.invariants();
        let sinv = short.invariants();
        assert_eq!(inv.c4, sinv.c4);
        assert_eq!(inv.c6, sinv.c6);
        assert_eq!(inv.disc, sinv.disc);
        // A = -c4/48, B = -c6/864.
        assert_eq!(
            *short.a4(),
            inv.c4.scale(&Rat::new((-1).into(), 48.into()))
        );
        assert_eq!(
            *short.a6(),
            inv.c6.scale(&Rat::new((-1).into(), 864.into()))
        );
    }

    #[test]
    fn twists_by_squares_are_isomorphic() {
        let e = WeierstrassModel::from_ints([0, 0, 1, -1, 0]);
        let t4 = e.quadratic_twist(&FieldElem::from_int(4)).unwrap();
        let t5 = e.quadratic_twist(&FieldElem::from_int(5)).unwrap();
        assert!(is_isomorphic(&e, &t4).unwrap());
        assert!(!is_isomorphic(&e, &t5).unwrap());
        assert_eq!(e.j_invariant().unwrap(), t5.j_invariant().unwrap());
        // Over Q(sqrt(5)) the twist by 5 becomes trivial.
        let k5 = Field::Quadratic(QuadField::new(5).unwrap());
        assert!(is_isomorphic(&e.coerce(k5).unwrap(), &t5).unwrap());
    }

    #[test]
    fn special_j_isomorphism_tests() {
        // j = 0: x^3 + d, isomorphic iff d ratio is a sixth power.
        let e1 = WeierstrassModel::from_ints([0, 0, 0, 0, 1]);
        let e64 = WeierstrassModel::from_ints([0, 0, 0, 0, 64]);
        let e2 = WeierstrassModel::from_ints([0, 0, 0, 0, 2]);
        assert!(is_isomorphic(&e1, &e64).unwrap());
        assert!(!is_isomorphic(&e1, &e2).unwrap());
        // j = 1728: x^3 + dx, isomorphic iff d ratio is a fourth power.
        let f1 = WeierstrassModel::from_ints([0, 0, 0, 1, 0]);
        let f16 = WeierstrassModel::from_ints([0, 0, 0, 16, 0]);
        let fm4 = WeierstrassModel::from_ints([0, 0, 0, -4, 0]);
        assert!(is_isomorphic(&f1, &f16).unwrap());
        assert!(!is_isomorphic(&f1, &fm4).unwrap());
        // Over Q(i) the curve x^3 + x becomes isomorphic to its isogenous
        // partner x^3 - 4x: the ratio -1/4 is ((1+i)/2)^4.
        let ki = Field::Quadratic(QuadField::new(-1).unwrap());
        assert!(is_isomorphic(&f1.coerce(ki).unwrap(), &fm4).unwrap());
    }

    #[test]
    fn model_json_roundtrip() {
        let e = WeierstrassModel::new(
            k10(),
            [e10(0, 1), e10(0, 1), e10(0, 0), e10(-8032, 1263), e10(-305877, 62956)],
        )
        .unwrap();
        let json = serde_json::to_string(&e).unwrap();
        let back: WeierstrassModel = serde_json::from_str(&json).unwrap();
        assert_eq!(e, back);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["field"], 10);
        assert_eq!(v["a"].as_array().unwrap().len(), 5);
        let q = WeierstrassModel::from_ints([0, 0, 1, -1, 0]);
        let json = serde_json::to_string(&q).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(v["field"].is_null());
        let back: WeierstrassModel = serde_json::from_str(&json).unwrap();
        assert_eq!(q, back);
    }

    #[test]
    fn parse_list_grammar() {
        let e = WeierstrassModel::parse_list("sqrt(10), sqrt(10), 0, 1263*sqrt(10)-8032, 62956*sqrt(10)-305877", k10())
            .unwrap();
        assert_eq!(e.discriminant(), e10(-38656, -12224));
        let q = WeierstrassModel::parse_list("0,0,1,-1,0", Field::Rational).unwrap();
        assert_eq!(q, WeierstrassModel::from_ints([0, 0, 1, -1, 0]));
    }
}
