//! Local reduction data of elliptic curves at primes of Q and of quadratic
//! fields: reduction types and Kodaira symbols, conductor exponents,
//! minimal discriminant valuations, and the scaling needed to reach a local
//! minimal model, computed by the classical step-by-step minimisation
//! procedure in exact arithmetic.
//!
//! The procedure works entirely inside the number field: the input model is
//! first cleared to global integrality, after which every intermediate
//! quantity keeps a denominator coprime to the residue characteristic, so
//! residue-field reductions stay well defined throughout.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::curve::{Transformation, WeierstrassModel};
use crate::error::{Error, Result};
use crate::ideals::{self, IdealBasis, IdealFactorization, PrimeIdeal};
use crate::numeric::{Field, FieldElem, Rat};
use crate::resfield::{ResElem, ResField};

/// Kodaira symbol of the special fibre at a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaSymbol {
    /// `I0` (good) and `In` for `n >= 1` (multiplicative).
    I(u32),
    II,
    III,
    IV,
    /// `I0*` and `In*`.
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaSymbol {
    /// Number of irreducible components of the special fibre (over the
    /// algebraic closure of the residue field), the `m` in the
    /// conductor-discriminant formula `f = v(disc) - m + 1`.
    pub fn component_count(&self) -> i64 {
        match self {
            KodairaSymbol::I(0) => 1,
            KodairaSymbol::I(n) => *n as i64,
            KodairaSymbol::II => 1,
            KodairaSymbol::III => 2,
            KodairaSymbol::IV => 3,
            KodairaSymbol::IStar(n) => *n as i64 + 5,
            KodairaSymbol::IVStar => 7,
            KodairaSymbol::IIIStar => 8,
            KodairaSymbol::IIStar => 9,
        }
    }

    /// Reduction type this symbol belongs to.
    pub fn reduction_type(&self) -> ReductionType {
        match self {
            KodairaSymbol::I(0) => ReductionType::Good,
            KodairaSymbol::I(_) => ReductionType::Multiplicative,
            _ => ReductionType::Additive,
        }
    }
}

impl fmt::Display for KodairaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaSymbol::I(n) => write!(f, "I{n}"),
            KodairaSymbol::II => write!(f, "II"),
            KodairaSymbol::III => write!(f, "III"),
            KodairaSymbol::IV => write!(f, "IV"),
            KodairaSymbol::IStar(n) => write!(f, "I{n}*"),
            KodairaSymbol::IVStar => write!(f, "IV*"),
            KodairaSymbol::IIIStar => write!(f, "III*"),
            KodairaSymbol::IIStar => write!(f, "II*"),
        }
    }
}

impl FromStr for KodairaSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<KodairaSymbol> {
        let bad = || Error::Parse(format!("unknown Kodaira symbol '{s}'"));
        match s {
            "II" => return Ok(KodairaSymbol::II),
            "III" => return Ok(KodairaSymbol::III),
            "IV" => return Ok(KodairaSymbol::IV),
            "II*" => return Ok(KodairaSymbol::IIStar),
            "III*" => return Ok(KodairaSymbol::IIIStar),
            "IV*" => return Ok(KodairaSymbol::IVStar),
            _ => {}
        }
        let body = s.strip_prefix('I').ok_or_else(bad)?;
        if let Some(core) = body.strip_suffix('*') {
            let n: u32 = core.parse().map_err(|_| bad())?;
            Ok(KodairaSymbol::IStar(n))
        } else {
            let n: u32 = body.parse().map_err(|_| bad())?;
            Ok(KodairaSymbol::I(n))
        }
    }
}

impl Serialize for KodairaSymbol {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// Coarse reduction type at a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionType {
    Good,
    Multiplicative,
    Additive,
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionType::Good => "good",
            ReductionType::Multiplicative => "multiplicative",
            ReductionType::Additive => "additive",
        })
    }
}

/// Everything the minimisation procedure learns about one prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalData {
    prime: PrimeIdeal,
    kodaira: KodairaSymbol,
    conductor_exponent: i64,
    minimal_disc_valuation: i64,
    /// Valuation of the scaling factor taking the input model to a local
    /// minimal model: `(v(disc_input) - v(disc_minimal)) / 12`.
    u_exponent: i64,
}

impl LocalData {
    pub fn prime(&self) -> &PrimeIdeal {
        &self.prime
    }

    pub fn kodaira(&self) -> KodairaSymbol {
        self.kodaira
    }

    pub fn conductor_exponent(&self) -> i64 {
        self.conductor_exponent
    }

    pub fn minimal_disc_valuation(&self) -> i64 {
        self.minimal_disc_valuation
    }

    pub fn u_exponent(&self) -> i64 {
        self.u_exponent
    }

    pub fn reduction_type(&self) -> ReductionType {
        self.kodaira.reduction_type()
    }

    /// Component count of the special fibre.
    pub fn component_count(&self) -> i64 {
        self.kodaira.component_count()
    }
}

impl Serialize for LocalData {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(6))?;
        map.serialize_entry("prime", &self.prime)?;
        map.serialize_entry("kodaira", &self.kodaira)?;
        map.serialize_entry("f", &self.conductor_exponent)?;
        map.serialize_entry("vmin", &self.minimal_disc_valuation)?;
        map.serialize_entry("m", &self.kodaira.component_count())?;
        map.serialize_entry("u_exp", &self.u_exponent)?;
        map.end()
    }
}

/// Working state for one prime: uniformiser, residue field, and valuations.
struct LocalCtx<'a> {
    prime: &'a PrimeIdeal,
    pi: FieldElem,
    rf: ResField,
}

impl LocalCtx<'_> {
    fn val(&self, x: &FieldElem) -> i64 {
        if x.is_zero() {
            i64::MAX
        } else {
            ideals::valuation(x, self.prime).expect("field-compatible element")
        }
    }

    /// `x / pi^k`.
    fn shift(&self, x: &FieldElem, k: i64) -> FieldElem {
        if k == 0 || x.is_zero() {
            return x.clone();
        }
        x.mul(&self.pi.pow(-k).expect("uniformiser invertible"))
            .expect("same field")
    }

    fn res(&self, x: &FieldElem) -> ResElem {
        self.rf
            .reduce(x)
            .expect("intermediate quantities stay semilocal")
    }

    /// Residue of `x / pi^k`.
    fn res_shift(&self, x: &FieldElem, k: i64) -> ResElem {
        self.res(&self.shift(x, k))
    }

    fn lift(&self, a: ResElem) -> FieldElem {
        self.rf.lift(a)
    }

    fn p(&self) -> u64 {
        self.rf.p()
    }
}

/// Runs the minimisation procedure for one model at one prime.
///
/// The returned scaling exponent is relative to the model as given, so it
/// also accounts for denominators cleared internally.
pub fn tate_local(model: &WeierstrassModel, prime: &PrimeIdeal) -> Result<LocalData> {
    let field = model.field().unify(prime.field())?;
    if field != prime.field() {
        return Err(Error::UnsupportedField(
            "prime lives in a smaller field than the model".into(),
        ));
    }
    let input = model.coerce(field)?;
    let input_disc = input.discriminant();
    if input_disc.is_zero() {
        return Err(Error::SingularModel);
    }

    let ctx = LocalCtx {
        prime,
        pi: prime.uniformiser().coerce(field)?,
        rf: ResField::of_prime(prime),
    };
    let v_input = ctx.val(&input_disc);

    // Clear denominators globally: scaling by 1/M multiplies a_i by M^i.
    let mut denom = BigInt::one();
    for ai in input.coefficients() {
        denom = denom.lcm(&ai.denominator());
    }
    let mut cur = if denom.is_one() {
        input
    } else {
        let tau = Transformation::scaling(FieldElem::from_rat(Rat::new(
            BigInt::one(),
            denom,
        )))?;
        input.transform(&tau)?
    };

    let finish = |kodaira: KodairaSymbol, f: i64, vmin: i64| -> Result<LocalData> {
        let diff = v_input - vmin;
        debug_assert!(diff % 12 == 0, "disc valuations differ by multiples of 12");
        Ok(LocalData {
            prime: prime.clone(),
            kodaira,
            conductor_exponent: f,
            minimal_disc_valuation: vmin,
            u_exponent: diff / 12,
        })
    };

    loop {
        let inv = cur.invariants();
        let n = ctx.val(&inv.disc);
        debug_assert!(n >= 0 && n < i64::MAX, "integral nonsingular model");
        if n == 0 {
            return finish(KodairaSymbol::I(0), 0, 0);
        }
        if ctx.val(&inv.c4) == 0 {
            // Nodal reduction; the model is already minimal here.
            return finish(KodairaSymbol::I(n as u32), 1, n);
        }

        // Additive: move the (unique) singular point to the origin.
        let (r, t) = singular_point_shift(&cur, &ctx)?;
        cur = cur.transform(&Transformation::new(
            FieldElem::one(field),
            r,
            FieldElem::zero(field),
            t,
        )?)?;
        debug_assert!(
            ctx.val(cur.a3()) >= 1 && ctx.val(cur.a4()) >= 1 && ctx.val(cur.a6()) >= 1,
            "origin is singular after translation"
        );

        if ctx.val(cur.a6()) < 2 {
            return finish(KodairaSymbol::II, n, n);
        }
        let inv = cur.invariants();
        if ctx.val(&inv.b8) < 3 {
            return finish(KodairaSymbol::III, n - 1, n);
        }
        if ctx.val(&inv.b6) < 3 {
            return finish(KodairaSymbol::IV, n - 2, n);
        }

        // Deepen the model so the depth-one cubic has integral coefficients.
        cur = normalise_for_cubic(cur, &ctx)?;
        debug_assert!(
            ctx.val(cur.a1()) >= 1
                && ctx.val(cur.a2()) >= 1
                && ctx.val(cur.a3()) >= 2
                && ctx.val(cur.a4()) >= 2
                && ctx.val(cur.a6()) >= 3
        );

        // P(T) = T^3 + (a2/pi) T^2 + (a4/pi^2) T + (a6/pi^3) over the
        // residue field. A multiple root of a cubic is always rational, so
        // the rational root multiplicities decide the shape.
        let c2 = ctx.res_shift(cur.a2(), 1);
        let c1 = ctx.res_shift(cur.a4(), 2);
        let c0 = ctx.res_shift(cur.a6(), 3);
        let cubic = [c0, c1, c2, ctx.rf.one()];
        let roots = ctx.rf.roots(&cubic)?;
        let max_mult = roots.iter().map(|(_, m)| *m).max().unwrap_or(1);

        if max_mult == 1 {
            return finish(KodairaSymbol::IStar(0), n - 4, n);
        }

        let (root, _) = roots
            .iter()
            .find(|(_, m)| *m == max_mult)
            .expect("multiple root exists");
        let shift = ctx.pi.mul(&ctx.lift(*root))?;
        cur = cur.transform(&Transformation::new(
            FieldElem::one(field),
            shift,
            FieldElem::zero(field),
            FieldElem::zero(field),
        )?)?;

        if max_mult == 2 {
            // Chain of quadratic tests for the I_n^* types.
            return in_star_loop(cur, &ctx, n, field, finish);
        }

        // Triple root at the origin now.
        debug_assert!(
            ctx.val(cur.a2()) >= 2 && ctx.val(cur.a4()) >= 3 && ctx.val(cur.a6()) >= 4
        );
        let q2 = [
            ctx.rf.neg(ctx.res_shift(cur.a6(), 4)),
            ctx.res_shift(cur.a3(), 2),
            ctx.rf.one(),
        ];
        match double_root(&q2, &ctx)? {
            None => return finish(KodairaSymbol::IVStar, n - 6, n),
            Some(y0) => {
                let t = ctx.pi.pow(2)?.mul(&ctx.lift(y0))?;
                cur = cur.transform(&Transformation::new(
                    FieldElem::one(field),
                    FieldElem::zero(field),
                    FieldElem::zero(field),
                    t,
                )?)?;
            }
        }
        debug_assert!(ctx.val(cur.a3()) >= 3 && ctx.val(cur.a6()) >= 5);
        if ctx.val(cur.a4()) < 4 {
            return finish(KodairaSymbol::IIIStar, n - 7, n);
        }
        if ctx.val(cur.a6()) < 6 {
            return finish(KodairaSymbol::IIStar, n - 8, n);
        }

        // Not minimal: divide the model through by pi and start over.
        cur = cur.transform(&Transformation::scaling(ctx.pi.clone())?)?;
        debug_assert!(cur.is_integral() || ctx.val(&cur.discriminant()) >= 0);
    }
}

/// Lifted coordinates of the singular point of the reduced curve, for a
/// model with additive reduction (`pi | c4`, `pi | disc`).
fn singular_point_shift(cur: &WeierstrassModel, ctx: &LocalCtx<'_>) -> Result<(FieldElem, FieldElem)> {
    let rf = &ctx.rf;
    let inv = cur.invariants();
    match ctx.p() {
        2 => {
            // a1, a3 vanish mod 2 here, so the reduced curve is
            // y^2 = x^3 + a2 x^2 + a4 x + a6 with singular x0 = sqrt(a4).
            let x0 = rf
                .sqrt(ctx.res(cur.a4()))?
                .expect("squares always exist in characteristic two");
            let r = ctx.lift(x0);
            let y2 = cur
                .a6()
                .add(&r.mul(&cur.a4().add(&r.mul(&cur.a2().add(&r)?)?)?)?)?;
            let y0 = rf
                .sqrt(ctx.res(&y2))?
                .expect("squares always exist in characteristic two");
            Ok((r, ctx.lift(y0)))
        }
        3 => {
            // b2 and b4 vanish mod 3 here, so the completed-square cubic is
            // x^3 + b6/4 with (triple) root cbrt(-b6).
            debug_assert!(ctx.val(&inv.b2) >= 1 && ctx.val(&inv.b4) >= 1);
            let x0 = rf
                .cbrt(rf.neg(ctx.res(&inv.b6)))?
                .expect("cubes always exist in characteristic three");
            let r = ctx.lift(x0);
            let t = ctx.lift(ctx.res(&cur.a1().mul(&r)?.add(cur.a3())?));
            Ok((r, t))
        }
        _ => {
            // The reduced cubic has a triple root at -b2/12.
            let twelve_inv = rf.inv(rf.from_u64(12 % ctx.p()))?;
            let x0 = rf.neg(rf.mul(ctx.res(&inv.b2), twelve_inv));
            let r = ctx.lift(x0);
            let half = rf.inv(rf.from_u64(2))?;
            let y0 = rf.neg(rf.mul(ctx.res(&cur.a1().mul(&r)?.add(cur.a3())?), half));
            Ok((r, ctx.lift(y0)))
        }
    }
}

/// Adjusts `a1, a2, a3, a6` so that the depth-one cubic has integral
/// coefficients: kills `a1, a3` exactly in odd characteristic, and uses
/// square-root shifts in characteristic two.
fn normalise_for_cubic(cur: WeierstrassModel, ctx: &LocalCtx<'_>) -> Result<WeierstrassModel> {
    let field = cur.field();
    let zero = FieldElem::zero(field);
    let one = FieldElem::one(field);
    if ctx.p() != 2 {
        let minus_half = Rat::new(BigInt::from(-1), BigInt::from(2));
        let s = cur.a1().scale(&minus_half);
        let cur = cur.transform(&Transformation::new(one.clone(), zero.clone(), s, zero.clone())?)?;
        let w = cur.a3().scale(&minus_half);
        let cur = cur.transform(&Transformation::new(one, zero.clone(), zero, w)?)?;
        debug_assert!(cur.a1().is_zero() && cur.a3().is_zero());
        Ok(cur)
    } else {
        let s = ctx.lift(
            ctx.rf
                .sqrt(ctx.res(cur.a2()))?
                .expect("squares always exist in characteristic two"),
        );
        let cur = cur.transform(&Transformation::new(one.clone(), zero.clone(), s, zero.clone())?)?;
        let w0 = ctx
            .rf
            .sqrt(ctx.res_shift(cur.a6(), 2))?
            .expect("squares always exist in characteristic two");
        let w = ctx.pi.mul(&ctx.lift(w0))?;
        cur.transform(&Transformation::new(one, zero.clone(), zero, w)?)
    }
}

/// Double root of a monic residue quadratic `[c0, c1, 1]`, or `None` when
/// its roots are distinct.
fn double_root(coeffs: &[ResElem; 3], ctx: &LocalCtx<'_>) -> Result<Option<ResElem>> {
    let rf = &ctx.rf;
    // Discriminant c1^2 - 4 c0.
    let disc = rf.sub(
        rf.mul(coeffs[1], coeffs[1]),
        rf.mul(rf.from_u64(4), coeffs[0]),
    );
    if !disc.is_zero() {
        return Ok(None);
    }
    if ctx.p() == 2 {
        // Y^2 + c1 Y + c0 with c1 = 0 mod 2: the double root is sqrt(-c0).
        debug_assert!(coeffs[1].is_zero());
        Ok(Some(
            rf.sqrt(rf.neg(coeffs[0]))?
                .expect("squares always exist in characteristic two"),
        ))
    } else {
        let half = rf.inv(rf.from_u64(2))?;
        Ok(Some(rf.neg(rf.mul(coeffs[1], half))))
    }
}

/// The alternating chain of quadratic tests that pins down `I_n^*`.
fn in_star_loop(
    mut cur: WeierstrassModel,
    ctx: &LocalCtx<'_>,
    n_disc: i64,
    field: Field,
    finish: impl Fn(KodairaSymbol, i64, i64) -> Result<LocalData>,
) -> Result<LocalData> {
    debug_assert_eq!(ctx.val(cur.a2()), 1, "double root away from zero");
    let mut ix: i64 = 3;
    let mut iy: i64 = 3;
    loop {
        // Quadratic in Y: Y^2 + (a3/pi^(iy-1)) Y - a6/pi^(ix+iy-2).
        let qy = [
            ctx.rf.neg(ctx.res_shift(cur.a6(), ix + iy - 2)),
            ctx.res_shift(cur.a3(), iy - 1),
            ctx.rf.one(),
        ];
        match double_root(&qy, ctx)? {
            None => {
                let n = (ix + iy - 5) as u32;
                return finish(KodairaSymbol::IStar(n), n_disc - 4 - n as i64, n_disc);
            }
            Some(y0) => {
                let t = ctx.pi.pow(iy - 1)?.mul(&ctx.lift(y0))?;
                cur = cur.transform(&Transformation::new(
                    FieldElem::one(field),
                    FieldElem::zero(field),
                    FieldElem::zero(field),
                    t,
                )?)?;
                iy += 1;
            }
        }
        // Quadratic in X: (a2/pi) X^2 + (a4/pi^(ix-1)·pi) X + a6/pi^(ix+iy-2),
        // normalised to monic by the invertible leading residue.
        let lead = ctx.res_shift(cur.a2(), 1);
        let linear = ctx.rf.div(ctx.res_shift(cur.a4(), ix), lead)?;
        let consta = ctx.rf.div(ctx.res_shift(cur.a6(), ix + iy - 2), lead)?;
        let qx = [consta, linear, ctx.rf.one()];
        match double_root(&qx, ctx)? {
            None => {
                let n = (ix + iy - 5) as u32;
                return finish(KodairaSymbol::IStar(n), n_disc - 4 - n as i64, n_disc);
            }
            Some(x0) => {
                let r = ctx.pi.pow(ix - 1)?.mul(&ctx.lift(x0))?;
                cur = cur.transform(&Transformation::new(
                    FieldElem::one(field),
                    r,
                    FieldElem::zero(field),
                    FieldElem::zero(field),
                )?)?;
                ix += 1;
            }
        }
    }
}

/// Local data at every prime where the curve can have bad reduction or a
/// non-minimal model (primes dividing the discriminant of the cleared
/// model), sorted by prime.
pub fn local_data_all(model: &WeierstrassModel) -> Result<Vec<LocalData>> {
    let inv = model.invariants();
    if inv.disc.is_zero() {
        return Err(Error::SingularModel);
    }
    let mut denom = BigInt::one();
    for ai in model.coefficients() {
        denom = denom.lcm(&ai.denominator());
    }
    let integral = if denom.is_one() {
        model.clone()
    } else {
        model.transform(&Transformation::scaling(FieldElem::from_rat(Rat::new(
            BigInt::one(),
            denom,
        )))?)?
    };
    let factored = ideals::factor_principal_ideal(&integral.discriminant())?;
    let mut out = Vec::new();
    for (prime, _) in factored.factors() {
        let ld = tate_local(model, prime)?;
        if ld.conductor_exponent > 0 || ld.u_exponent != 0 || ld.minimal_disc_valuation > 0 {
            out.push(ld);
        }
    }
    out.sort_by(|a, b| a.prime.cmp(&b.prime));
    Ok(out)
}

/// The conductor as a factored ideal.
pub fn conductor_ideal(model: &WeierstrassModel) -> Result<IdealFactorization> {
    let data = local_data_all(model)?;
    Ok(IdealFactorization::new(
        model.field(),
        data.into_iter()
            .map(|ld| {
                let e = ld.conductor_exponent;
                (ld.prime, e)
            })
            .collect(),
    ))
}

/// The minimal discriminant as a factored ideal.
pub fn minimal_discriminant_ideal(model: &WeierstrassModel) -> Result<IdealFactorization> {
    let data = local_data_all(model)?;
    Ok(IdealFactorization::new(
        model.field(),
        data.into_iter()
            .map(|ld| {
                let v = ld.minimal_disc_valuation;
                (ld.prime, v)
            })
            .collect(),
    ))
}

/// Absolute norm of the conductor ideal (the conductor itself over Q).
pub fn conductor_norm(model: &WeierstrassModel) -> Result<Rat> {
    Ok(conductor_ideal(model)?.norm())
}

/// The minimal discriminant as a field element, canonical over Q and over
/// imaginary quadratic fields (where twelfth powers of units are trivial).
///
/// Fails with [`Error::NoGlobalMinimalModel`] when the scaling ideal is not
/// principal, and refuses real quadratic fields, whose infinite unit group
/// makes the value non-canonical.
pub fn minimal_discriminant_value(model: &WeierstrassModel) -> Result<FieldElem> {
    let data = local_data_all(model)?;
    let disc = model.discriminant();
    if disc.is_zero() {
        return Err(Error::SingularModel);
    }
    match model.field() {
        Field::Rational => {
            let mut scale = FieldElem::one(Field::Rational);
            for ld in &data {
                let step = FieldElem::from_bigint(BigInt::from(ld.prime.p()))
                    .pow(ld.u_exponent)?;
                scale = scale.mul(&step)?;
            }
            disc.div(&scale.pow(12)?)
        }
        Field::Quadratic(k) if k.is_imaginary() => {
            if data.iter().all(|ld| ld.u_exponent == 0) {
                return Ok(disc);
            }
            // Split the scaling ideal into the parts above and below the
            // input model; each part must be principal.
            let mut up = IdealBasis::full_ring();
            let mut down = IdealBasis::full_ring();
            for ld in &data {
                if ld.u_exponent > 0 {
                    let power = ideals::ideal_power_basis(&ld.prime, ld.u_exponent as u32)?;
                    up = up.mul(&power, k);
                } else if ld.u_exponent < 0 {
                    let power =
                        ideals::ideal_power_basis(&ld.prime, (-ld.u_exponent) as u32)?;
                    down = down.mul(&power, k);
                }
            }
            let gen_up = ideals::generator_of_basis(&up, model.field())?
                .ok_or(Error::NoGlobalMinimalModel)?;
            let gen_down = ideals::generator_of_basis(&down, model.field())?
                .ok_or(Error::NoGlobalMinimalModel)?;
            disc.mul(&gen_down.pow(12)?)?.div(&gen_up.pow(12)?)
        }
        Field::Quadratic(_) => Err(Error::InfiniteUnitGroup),
    }
}

/// The Kodaira symbol of a potentially good curve at a prime away from 6,
/// read off from the minimal discriminant valuation mod 12.
pub fn kodaira_from_mod12(v: i64) -> Result<KodairaSymbol> {
    match v.rem_euclid(12) {
        0 => Ok(KodairaSymbol::I(0)),
        2 => Ok(KodairaSymbol::II),
        3 => Ok(KodairaSymbol::III),
        4 => Ok(KodairaSymbol::IV),
        6 => Ok(KodairaSymbol::IStar(0)),
        8 => Ok(KodairaSymbol::IVStar),
        9 => Ok(KodairaSymbol::IIIStar),
        10 => Ok(KodairaSymbol::IIStar),
        r => Err(Error::InvalidResidue(r)),
    }
}

/// Checks the valuation relations that a `p`-isogenous pair must satisfy at
/// one prime: equal types, with discriminant valuations tied together by
/// the isogeny degree (trivially for good reduction, by a factor `p` for
/// multiplicative reduction, through the j-valuation in the potentially
/// multiplicative additive case, and by equality in the tame potentially
/// good case).
pub fn isogenous_valuation_check(
    p_isog: u64,
    ld1: &LocalData,
    j1: &FieldElem,
    ld2: &LocalData,
    j2: &FieldElem,
) -> Result<bool> {
    if ld1.prime != ld2.prime {
        return Err(Error::IncompatiblePrimes);
    }
    let prime = &ld1.prime;
    let (d1, d2) = (ld1.minimal_disc_valuation, ld2.minimal_disc_valuation);
    let vj = |j: &FieldElem| -> Result<i64> {
        if j.is_zero() {
            Ok(i64::MAX) // integral-valuation convention for j = 0
        } else {
            ideals::valuation(j, prime)
        }
    };
    Ok(match (ld1.reduction_type(), ld2.reduction_type()) {
        (ReductionType::Good, ReductionType::Good) => d1 == 0 && d2 == 0,
        (ReductionType::Multiplicative, ReductionType::Multiplicative) => {
            d2 == p_isog as i64 * d1 || d1 == p_isog as i64 * d2
        }
        (ReductionType::Additive, ReductionType::Additive) => {
            let (v1, v2) = (vj(j1)?, vj(j2)?);
            if v1 < 0 {
                // Potentially multiplicative: j-valuations scale by p and
                // discriminant differences track them.
                (v2 == p_isog as i64 * v1 || v1 == p_isog as i64 * v2) && (d2 - d1 == v1 - v2)
            } else if prime.p() != p_isog {
                d1 == d2
            } else if prime.p() <= 3 {
                true // wild case carries no elementary constraint
            } else {
                d1 == d2 || d1 + d2 == 12
            }
        }
        _ => false,
    })
}
