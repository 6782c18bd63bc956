//! Parameterised families of p-isogenous elliptic curves.
//!
//! For each degree p in {2, 3, 5, 7, 13} there are two one-parameter families
//! of curves, joined member-to-member by a p-isogeny:
//!
//! ```text
//!     C_{p,i}(t, d):  y² = x³ + d²·A_{p,i}(t)·x + d³·B_{p,i}(t),   i = 1, 2,
//! ```
//!
//! where d plays the role of a quadratic-twist parameter.  This module stores
//! the defining polynomials A, B exactly, together with closed forms for the
//! j-invariant and the discriminant, classifies the parameter values where a
//! specialisation degenerates or the two members share a j-invariant, and
//! provides the companion constructions for the special j-invariants 0 and
//! 1728 (which the families miss) along with the explicit kernel-map
//! identities that certify those isogenies.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::curve::WeierstrassModel;
use crate::error::{Error, Result};
use crate::numeric::{rat, FieldElem, Rat};
use crate::poly::Poly;

/// Isogeny degrees for which the two-member family construction exists.
pub const FAMILY_PRIMES: [u64; 5] = [2, 3, 5, 7, 13];

/// 2¹²·3¹², the constant relating the discriminant of a short Weierstrass
/// model to the reduced discriminant factor D(t): Δ(t,d) = 2¹²3¹²·d⁶·D(t).
const DISC_SCALE: i64 = 2_176_782_336;

/// Exact defining data for one family member C_{p,i}.
#[derive(Debug, Clone)]
pub struct FamilyPolys {
    /// Isogeny degree p.
    pub p: u64,
    /// Member index, 1 or 2.
    pub i: u8,
    /// Coefficient polynomial A(t); the curve is y² = x³ + d²A(t)x + d³B(t).
    pub a: Poly,
    /// Coefficient polynomial B(t).
    pub b: Poly,
    /// Numerator of the j-invariant; the denominator is t^(j_den_exp).
    pub j_num: Poly,
    /// Denominator exponent e in j(t) = j_num(t)/tᵉ (e = p for the first
    /// member, e = 1 for the second).
    pub j_den_exp: u32,
    /// Reduced discriminant factor D(t) with Δ(t,d) = 2¹²3¹²·d⁶·D(t).
    pub disc_factor: Poly,
}

fn build_families() -> Vec<FamilyPolys> {
    let pl = Poly::from_ints;
    let t = Poly::t();
    let mut out = Vec::with_capacity(10);

    // p = 2; common degenerate factor t + 64.
    let s2 = pl(&[64, 1]);
    out.push(FamilyPolys {
        p: 2,
        i: 1,
        a: pl(&[256, 1]).mul(&s2).scale(&rat(-27)),
        b: pl(&[-512, 1]).mul(&s2.pow(2)).scale(&rat(-54)),
        j_num: pl(&[256, 1]).pow(3),
        j_den_exp: 2,
        disc_factor: t.pow(2).mul(&s2.pow(3)),
    });
    out.push(FamilyPolys {
        p: 2,
        i: 2,
        a: pl(&[16, 1]).mul(&s2).scale(&rat(-432)),
        b: pl(&[-8, 1]).mul(&s2.pow(2)).scale(&rat(-3456)),
        j_num: pl(&[16, 1]).pow(3),
        j_den_exp: 1,
        disc_factor: t.mul(&s2.pow(3)).scale(&rat(4096)),
    });

    // p = 3; common degenerate factor t + 27.
    let s3 = pl(&[27, 1]);
    out.push(FamilyPolys {
        p: 3,
        i: 1,
        a: pl(&[243, 1]).mul(&s3.pow(3)).scale(&rat(-3)),
        b: s3.pow(4).mul(&pl(&[19683, 486, -1])).scale(&rat(-2)),
        j_num: pl(&[243, 1]).pow(3).mul(&s3),
        j_den_exp: 3,
        disc_factor: t.pow(3).mul(&s3.pow(8)).scale(&(rat(1) / rat(729))),
    });
    out.push(FamilyPolys {
        p: 3,
        i: 2,
        a: pl(&[3, 1]).mul(&s3.pow(3)).scale(&rat(-243)),
        b: s3.pow(4).mul(&pl(&[27, -18, -1])).scale(&rat(-1458)),
        j_num: pl(&[3, 1]).pow(3).mul(&s3),
        j_den_exp: 1,
        disc_factor: t.mul(&s3.pow(8)).scale(&rat(729)),
    });

    // p = 5; common degenerate factor t² + 22t + 125.
    let s5 = pl(&[125, 22, 1]);
    out.push(FamilyPolys {
        p: 5,
        i: 1,
        a: s5.mul(&pl(&[3125, 250, 1])).scale(&rat(-27)),
        b: pl(&[15625, 500, -1]).mul(&s5.pow(2)).scale(&rat(-54)),
        j_num: pl(&[3125, 250, 1]).pow(3),
        j_den_exp: 5,
        disc_factor: t.pow(5).mul(&s5.pow(3)),
    });
    out.push(FamilyPolys {
        p: 5,
        i: 2,
        a: pl(&[5, 10, 1]).mul(&s5).scale(&rat(-16875)),
        b: pl(&[1, -4, -1]).mul(&s5.pow(2)).scale(&rat(-843750)),
        j_num: pl(&[5, 10, 1]).pow(3),
        j_den_exp: 1,
        disc_factor: t.mul(&s5.pow(3)).scale(&rat(244_140_625)),
    });

    // p = 7; common degenerate factor t² + 13t + 49.
    let s7 = pl(&[49, 13, 1]);
    out.push(FamilyPolys {
        p: 7,
        i: 1,
        a: s7.mul(&pl(&[2401, 245, 1])).scale(&rat(-27)),
        b: s7.mul(&pl(&[823_543, 235_298, 21_609, 490, -1])).scale(&rat(-54)),
        j_num: pl(&[2401, 245, 1]).pow(3).mul(&s7),
        j_den_exp: 7,
        disc_factor: t.pow(7).mul(&s7.pow(2)),
    });
    out.push(FamilyPolys {
        p: 7,
        i: 2,
        a: pl(&[1, 5, 1]).mul(&s7).scale(&rat(-64_827)),
        b: s7.mul(&pl(&[7, -70, -63, -14, -1])).scale(&rat(-6_353_046)),
        j_num: pl(&[1, 5, 1]).pow(3).mul(&s7),
        j_den_exp: 1,
        disc_factor: t.mul(&s7.pow(2)).scale(&rat(13_841_287_201)),
    });

    // p = 13; common degenerate factors t² + 5t + 13 and t² + 6t + 13.
    let s13a = pl(&[13, 5, 1]);
    let s13b = pl(&[13, 6, 1]);
    out.push(FamilyPolys {
        p: 13,
        i: 1,
        a: s13a
            .mul(&s13b)
            .mul(&pl(&[28_561, 15_379, 3380, 247, 1]))
            .scale(&rat(-27)),
        b: s13a
            .mul(&s13b.pow(2))
            .mul(&pl(&[4_826_809, 3_712_930, 1_313_806, 237_276, 20_618, 494, -1]))
            .scale(&rat(-54)),
        j_num: pl(&[28_561, 15_379, 3380, 247, 1]).pow(3).mul(&s13a),
        j_den_exp: 13,
        disc_factor: t.pow(13).mul(&s13b.pow(3)).mul(&s13a.pow(2)),
    });
    out.push(FamilyPolys {
        p: 13,
        i: 2,
        a: s13a.mul(&s13b).mul(&pl(&[1, 19, 20, 7, 1])).scale(&rat(-771_147)),
        b: s13a
            .mul(&s13b.pow(2))
            .mul(&pl(&[1, -38, -122, -108, -46, -10, -1]))
            .scale(&rat(-260_647_686)),
        j_num: pl(&[1, 19, 20, 7, 1]).pow(3).mul(&s13a),
        j_den_exp: 1,
        disc_factor: t
            .mul(&s13b.pow(3))
            .mul(&s13a.pow(2))
            .scale(&rat(23_298_085_122_481)),
    });

    out
}

fn all_families() -> &'static [FamilyPolys] {
    static CELL: OnceLock<Vec<FamilyPolys>> = OnceLock::new();
    CELL.get_or_init(build_families)
}

/// Looks up the defining data of the family member C_{p,i}.
pub fn family_polys(p: u64, i: u8) -> Result<&'static FamilyPolys> {
    all_families()
        .iter()
        .find(|f| f.p == p && f.i == i)
        .ok_or(Error::BadFamilyKey(p, i))
}

/// The monic parameter factors at whose roots both family members for this p
/// degenerate (discriminant zero): the parameter itself together with the
/// shared factors of the two discriminants.
pub fn singular_t_factors(p: u64) -> Result<Vec<Poly>> {
    let coeffs: &[&[i64]] = match p {
        2 => &[&[0, 1], &[64, 1]],
        3 => &[&[0, 1], &[27, 1]],
        5 => &[&[0, 1], &[125, 22, 1]],
        7 => &[&[0, 1], &[49, 13, 1]],
        13 => &[&[0, 1], &[13, 6, 1], &[13, 5, 1]],
        _ => return Err(Error::BadFamilyKey(p, 1)),
    };
    Ok(coeffs.iter().map(|c| Poly::from_ints(c)).collect())
}

/// Constructs the curve C_{p,i}(t0, d0): y² = x³ + d0²A(t0)x + d0³B(t0).
///
/// Rejects parameter values at which the specialisation is singular, naming
/// the vanishing factor.
pub fn family_curve(p: u64, i: u8, t0: &FieldElem, d0: &FieldElem) -> Result<WeierstrassModel> {
    let fam = family_polys(p, i)?;
    if d0.is_zero() {
        return Err(Error::ZeroFamilyTwist);
    }
    for f in singular_t_factors(p)? {
        if f.eval(t0).is_zero() {
            return Err(Error::SingularParameter(f.to_string()));
        }
    }
    let field = t0.field().unify(d0.field())?;
    let t = t0.coerce(field)?;
    let d = d0.coerce(field)?;
    let a4 = d.pow(2)?.mul(&fam.a.eval(&t))?;
    let a6 = d.pow(3)?.mul(&fam.b.eval(&t))?;
    WeierstrassModel::short(field, a4, a6)
}

/// Evaluates the closed-form j-invariant j_{p,i}(t0) = j_num(t0)/t0ᵉ.
pub fn family_j(p: u64, i: u8, t0: &FieldElem) -> Result<FieldElem> {
    let fam = family_polys(p, i)?;
    if t0.is_zero() {
        return Err(Error::ZeroParameter);
    }
    for f in singular_t_factors(p)? {
        if f.eval(t0).is_zero() {
            return Err(Error::SingularParameter(f.to_string()));
        }
    }
    fam.j_num.eval(t0).div(&t0.pow(fam.j_den_exp as i64)?)
}

/// Evaluates the closed-form discriminant Δ_{p,i}(t0, d0) = 2¹²3¹²·d0⁶·D(t0).
///
/// A zero result signals a singular specialisation.
pub fn family_disc(p: u64, i: u8, t0: &FieldElem, d0: &FieldElem) -> Result<FieldElem> {
    let fam = family_polys(p, i)?;
    if d0.is_zero() {
        return Err(Error::ZeroFamilyTwist);
    }
    let field = t0.field().unify(d0.field())?;
    let t = t0.coerce(field)?;
    let d = d0.coerce(field)?;
    Ok(d.pow(6)?.mul(&fam.disc_factor.eval(&t))?.scale(&rat(DISC_SCALE)))
}

/// How the two family members relate at a parameter value, as far as their
/// j-invariants are concerned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualJCase {
    /// j₁(t0) ≠ j₂(t0): nothing special about this parameter.
    Generic,
    /// Degenerate specialisation; `factor` names the vanishing factor.
    SingularJ { factor: String },
    /// Equal j-invariants, and the two members are isomorphic over every
    /// field containing t0 (the extra endomorphisms of these CM curves are
    /// already defined there), so they are never twins.
    IsomorphicCm { factor: String },
    /// Equal j-invariants, and the members are discriminant ideal twins over
    /// every number field containing t0.
    EqualJDit { factor: String, j: FieldElem },
    /// Equal rational j-invariant; the members are discriminant ideal twins
    /// exactly over fields K in which pO_K is a square ideal and which do
    /// not contain ℚ(√cm_radicand) (there they become isomorphic).  Their
    /// minimal discriminant ideals differ by (pO_K)^disc_ratio_exp.
    EqualJConditional {
        j: Rat,
        cm_radicand: i64,
        disc_ratio_exp: i64,
    },
}

/// Parameter factors at whose roots the two members become isomorphic CM
/// curves (one row per Galois orbit).
fn isomorphic_cm_coeffs(p: u64) -> &'static [&'static [i64]] {
    match p {
        2 => &[&[4096, 47, 1]],
        3 => &[&[729, 46, 1], &[729, -10, 1]],
        5 => &[&[125, 18, 1], &[125, 4, 1], &[125, -14, 1]],
        7 => &[
            &[2401, 490, 51, 10, 1],
            &[49, 11, 1],
            &[49, 5, 1],
            &[49, -11, 1],
        ],
        13 => &[
            &[169, 78, 23, 6, 1],
            &[169, -13, -12, -1, 1],
            &[169, 0, -1, 0, 1],
            &[13, 7, 1],
            &[13, 4, 1],
            &[13, 2, 1],
            &[13, -3, 1],
        ],
        _ => &[],
    }
}

/// Classifies a parameter value by the relation it induces between the two
/// members' j-invariants.
pub fn equal_j_case(p: u64, t0: &FieldElem) -> Result<EqualJCase> {
    family_polys(p, 1)?;
    for f in singular_t_factors(p)? {
        if f.eval(t0).is_zero() {
            return Ok(EqualJCase::SingularJ { factor: f.to_string() });
        }
    }
    for coeffs in isomorphic_cm_coeffs(p) {
        let f = Poly::from_ints(coeffs);
        if f.eval(t0).is_zero() {
            return Ok(EqualJCase::IsomorphicCm { factor: f.to_string() });
        }
    }
    // Unconditional equal-j twin factors, with the induced (linear) j value.
    let dit_rows: &[(&[i64], &[i64])] = match p {
        5 => &[(&[-125, 0, 1], &[632_000, 56_576])],
        13 => &[(&[-13, 0, 1], &[3_448_440_000, 956_448_000])],
        _ => &[],
    };
    for (fc, jc) in dit_rows {
        let f = Poly::from_ints(fc);
        if f.eval(t0).is_zero() {
            return Ok(EqualJCase::EqualJDit {
                factor: f.to_string(),
                j: Poly::from_ints(jc).eval(t0),
            });
        }
    }
    // Rational equal-j parameters whose twin status depends on the field.
    let cond_rows: &[(i64, i64, i64, i64)] = match p {
        2 => &[(64, 8000, -2, -6)],
        3 => &[(27, 54_000, -3, -6)],
        7 => &[(-7, -3375, -7, 6), (7, 16_581_375, -7, 6)],
        _ => &[],
    };
    for &(root, j, cm, exp) in cond_rows {
        if Poly::from_ints(&[-root, 1]).eval(t0).is_zero() {
            return Ok(EqualJCase::EqualJConditional {
                j: rat(j),
                cm_radicand: cm,
                disc_ratio_exp: exp,
            });
        }
    }
    Ok(EqualJCase::Generic)
}

/// Constructs the p-isogenous pair of curves with the given special
/// j-invariant: for (p, j) = (3, 0) the pair (y² = x³ + d, y² = x³ − 27d),
/// and for (p, j) = (2, 1728) the pair (y² = x³ + dx, y² = x³ − 4dx).
pub fn special_j_pair(
    p: u64,
    j: i64,
    d: &FieldElem,
) -> Result<(WeierstrassModel, WeierstrassModel)> {
    if d.is_zero() {
        return Err(Error::ZeroFamilyTwist);
    }
    let field = d.field();
    let zero = FieldElem::zero(field);
    match (p, j) {
        (3, 0) => Ok((
            WeierstrassModel::short(field, zero.clone(), d.clone())?,
            WeierstrassModel::short(field, zero, d.scale(&rat(-27)))?,
        )),
        (2, 1728) => Ok((
            WeierstrassModel::short(field, d.clone(), zero.clone())?,
            WeierstrassModel::short(field, d.scale(&rat(-4)), zero)?,
        )),
        _ => Err(Error::BadPair(p, j)),
    }
}

/// Verifies the rational map certifying the special-j isogenies: for
/// (p, j) = (3, 0) the x-coordinate map is L(x) = (x³ + 4d)/x² and a point
/// (x, y) on y² = x³ + d must land on Y² = X³ − 27d; for (p, j) = (2, 1728)
/// the map is L(x) = (x² + d)/x onto Y² = X³ − 4dX.  Both are checked as
/// exact polynomial identities in x and d.
pub fn kernel_identity_check(p: u64, j: i64) -> Result<bool> {
    match (p, j) {
        (3, 0) => Ok(kernel_identity_holds(0, 4)),
        (2, 1728) => Ok(kernel_identity_holds(1728, 1)),
        _ => Err(Error::BadPair(p, j)),
    }
}

/// Checks the kernel-map identity with the map's d-coefficient `c` left
/// adjustable so a deliberately wrong map can serve as a negative control.
///
/// Both cleared identities are polynomials of degree at most 3 in d, so
/// verifying the polynomial identity in x at four distinct d values proves
/// the two-variable identity.
fn kernel_identity_holds(j: i64, c: i64) -> bool {
    for dv in 1..=4 {
        let d = rat(dv);
        let (lhs, rhs) = match j {
            0 => {
                // L = n/x² with n = x³ + c·d; the identity, cleared by x⁶:
                //   (x³ + d)·(n'x − 2n)² = n³ − 27d·x⁶.
                let n = Poly::new(vec![&d * rat(c), Rat::zero(), Rat::zero(), Rat::one()]);
                let dn = n.derivative().mul(&Poly::t()).sub(&n.scale(&rat(2)));
                let x3d = Poly::new(vec![d.clone(), Rat::zero(), Rat::zero(), Rat::one()]);
                (
                    x3d.mul(&dn.pow(2)),
                    n.pow(3).sub(&Poly::t().pow(6).scale(&(&d * rat(27)))),
                )
            }
            _ => {
                // L = n/x with n = x² + c·d; the identity, cleared by x⁴:
                //   (x³ + dx)·(n'x − n)² = x·n³ − 4d·n·x³.
                let n = Poly::new(vec![&d * rat(c), Rat::zero(), Rat::one()]);
                let dn = n.derivative().mul(&Poly::t()).sub(&n);
                let x3dx = Poly::new(vec![Rat::zero(), d.clone(), Rat::zero(), Rat::one()]);
                (
                    x3dx.mul(&dn.pow(2)),
                    Poly::t()
                        .mul(&n.pow(3))
                        .sub(&Poly::t().pow(3).mul(&n).scale(&(&d * rat(4)))),
                )
            }
        };
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Verifies the parameter swap that exchanges the two members: over ℚ,
/// j_{p,1}(±1) = j_{p,2}(±p^(12/(p−1))) and j_{p,2}(±1) = j_{p,1}(±p^(12/(p−1))).
pub fn fricke_swap_check(p: u64) -> Result<bool> {
    family_polys(p, 1)?;
    let m = (p as i64).pow(12 / (p as u32 - 1));
    for sign in [1i64, -1] {
        let near = FieldElem::from_int(sign);
        let far = FieldElem::from_int(sign * m);
        if family_j(p, 1, &near)? != family_j(p, 2, &far)?
            || family_j(p, 2, &near)? != family_j(p, 1, &far)?
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of p-isogenies admitted by a curve with the given special
/// j-invariant (0 or 1728), over any field containing the curve's CM
/// endomorphisms.  These counts mirror how p behaves in the endomorphism
/// rings ℤ[ζ₃] (for j = 0) and ℤ[i] (for j = 1728): one isogeny when p
/// ramifies, two when p splits, none when p is inert.
pub fn special_j_isogeny_count(p: u64, j: i64) -> Result<u32> {
    let idx = FAMILY_PRIMES
        .iter()
        .position(|&q| q == p)
        .ok_or(Error::BadFamilyKey(p, 1))?;
    match j {
        0 => Ok([0, 1, 0, 2, 2][idx]),
        1728 => Ok([1, 0, 2, 0, 2][idx]),
        _ => Err(Error::BadPair(p, j)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{Field, QuadField};

    fn elem(field: Field, a: i64, b: i64) -> FieldElem {
        FieldElem::new(
            field.quadratic().expect("quadratic field"),
            rat(a),
            rat(b),
        )
    }

    /// The defining polynomials, the closed-form discriminant, and the
    /// closed-form j-invariant must satisfy the short-model identities
    /// −16(4A³ + 27B²) = Δ and j = c4³/Δ as exact polynomial identities.
    #[test]
    fn transcription_identities() {
        for fam in all_families() {
            let delta = fam
                .a
                .pow(3)
                .scale(&rat(-64))
                .add(&fam.b.pow(2).scale(&rat(-432)));
            assert_eq!(
                delta,
                fam.disc_factor.scale(&rat(DISC_SCALE)),
                "discriminant identity fails for p={} i={}",
                fam.p,
                fam.i
            );
            // j·Δ = c4³ = (−48A)³, with the closed form j = j_num/t^e:
            // j_num·Δ = −110592·A³·tᵉ.
            let lhs = fam.j_num.mul(&delta);
            let rhs = fam
                .a
                .pow(3)
                .scale(&rat(-110_592))
                .mul(&Poly::t().pow(fam.j_den_exp));
            assert_eq!(lhs, rhs, "j identity fails for p={} i={}", fam.p, fam.i);
        }
    }

    #[test]
    fn closed_forms_match_curve_invariants() {
        for fam in all_families() {
            for (tv, dv) in [(1, 1), (-2, 1), (5, -3), (9, 2)] {
                let t0 = FieldElem::from_int(tv);
                let d0 = FieldElem::from_int(dv);
                let curve = family_curve(fam.p, fam.i, &t0, &d0).unwrap();
                let inv = curve.invariants();
                assert_eq!(inv.disc, family_disc(fam.p, fam.i, &t0, &d0).unwrap());
                assert_eq!(curve.j_invariant().unwrap(), family_j(fam.p, fam.i, &t0).unwrap());
            }
        }
        // Same consistency over a quadratic field.
        let field = Field::from_radicand(Some(-33)).unwrap();
        let t0 = elem(field, 4, 1);
        let d0 = FieldElem::int_in(field, 1);
        for i in [1, 2] {
            let curve = family_curve(7, i, &t0, &d0).unwrap();
            assert_eq!(curve.j_invariant().unwrap(), family_j(7, i, &t0).unwrap());
            assert_eq!(curve.discriminant(), family_disc(7, i, &t0, &d0).unwrap());
        }
    }

    #[test]
    fn discriminant_ratio_law() {
        // Δ_{p,1}/Δ_{p,2} = t^(p−1)·p⁻¹² identically.
        for &p in &FAMILY_PRIMES {
            for (tv, dv) in [(2, 1), (-5, 3), (11, -2)] {
                let t0 = FieldElem::from_int(tv);
                let d0 = FieldElem::from_int(dv);
                let ratio = family_disc(p, 1, &t0, &d0)
                    .unwrap()
                    .div(&family_disc(p, 2, &t0, &d0).unwrap())
                    .unwrap();
                let expected = t0
                    .pow(p as i64 - 1)
                    .unwrap()
                    .scale(&(rat(1) / rat(p as i64).pow(12)));
                assert_eq!(ratio, expected, "ratio law fails for p={p} t={tv}");
            }
        }
    }

    #[test]
    fn sample_curves_and_degenerate_parameters() {
        let c22 = family_curve(
            2,
            2,
            &FieldElem::from_int(16),
            &FieldElem::from_int(1),
        )
        .unwrap();
        assert_eq!(*c22.a4(), FieldElem::from_int(-1_105_920));
        assert_eq!(*c22.a6(), FieldElem::from_int(-176_947_200));

        let c21 = family_curve(
            2,
            1,
            &FieldElem::from_int(16),
            &FieldElem::from_int(-2),
        )
        .unwrap();
        assert_eq!(*c21.a4(), FieldElem::from_int(-2_350_080));
        assert_eq!(*c21.a6(), FieldElem::from_int(-1_371_340_800));

        assert_eq!(
            family_curve(2, 1, &FieldElem::from_int(-64), &FieldElem::from_int(1)),
            Err(Error::SingularParameter("t + 64".into()))
        );
        assert_eq!(
            family_curve(5, 1, &FieldElem::from_int(0), &FieldElem::from_int(1)),
            Err(Error::SingularParameter("t".into()))
        );
        assert_eq!(
            family_curve(5, 1, &FieldElem::from_int(3), &FieldElem::from_int(0)),
            Err(Error::ZeroFamilyTwist)
        );
        assert!(matches!(
            family_curve(11, 1, &FieldElem::from_int(3), &FieldElem::from_int(1)),
            Err(Error::BadFamilyKey(11, 1))
        ));
        // The degenerate specialisation of the second p=5 member vanishes at
        // the roots of t² + 22t + 125, e.g. −11 + 2i.
        let gauss = Field::from_radicand(Some(-1)).unwrap();
        assert_eq!(
            family_curve(5, 2, &elem(gauss, -11, 2), &FieldElem::int_in(gauss, 1)),
            Err(Error::SingularParameter("t^2 + 22t + 125".into()))
        );
        // j at a numerator root is 0.
        assert!(family_j(2, 1, &FieldElem::from_int(-256)).unwrap().is_zero());
    }

    #[test]
    fn equal_j_classification() {
        // Field-independent rational parameters.
        assert_eq!(
            equal_j_case(2, &FieldElem::from_int(64)).unwrap(),
            EqualJCase::EqualJConditional { j: rat(8000), cm_radicand: -2, disc_ratio_exp: -6 }
        );
        assert_eq!(
            equal_j_case(3, &FieldElem::from_int(27)).unwrap(),
            EqualJCase::EqualJConditional { j: rat(54_000), cm_radicand: -3, disc_ratio_exp: -6 }
        );
        assert_eq!(
            equal_j_case(7, &FieldElem::from_int(-7)).unwrap(),
            EqualJCase::EqualJConditional { j: rat(-3375), cm_radicand: -7, disc_ratio_exp: 6 }
        );
        assert_eq!(
            equal_j_case(7, &FieldElem::from_int(7)).unwrap(),
            EqualJCase::EqualJConditional {
                j: rat(16_581_375),
                cm_radicand: -7,
                disc_ratio_exp: 6
            }
        );
        assert_eq!(equal_j_case(3, &FieldElem::from_int(5)).unwrap(), EqualJCase::Generic);

        // Root of t² − 125 in ℚ(√5): unconditional ideal twins, with the
        // closed-form j agreeing with both members' j-invariants.
        let real5 = Field::from_radicand(Some(5)).unwrap();
        let t0 = elem(real5, 0, 5); // 5√5, a root of t² − 125
        match equal_j_case(5, &t0).unwrap() {
            EqualJCase::EqualJDit { factor, j } => {
                assert_eq!(factor, "t^2 - 125");
                assert_eq!(j, family_j(5, 1, &t0).unwrap());
                assert_eq!(j, family_j(5, 2, &t0).unwrap());
            }
            other => panic!("expected equal-j twin case, got {other:?}"),
        }

        // Root of t² + 47t + 4096 lies in ℚ(√−7) (47² − 4·4096 = −14175 =
        // −7·45²): the members are isomorphic CM curves there.
        let seven = QuadField::new(-7).unwrap();
        let t0 = FieldElem::new(seven, rat(-47) / rat(2), rat(45) / rat(2));
        match equal_j_case(2, &t0).unwrap() {
            EqualJCase::IsomorphicCm { factor } => {
                assert_eq!(factor, "t^2 + 47t + 4096");
                let j1 = family_j(2, 1, &t0).unwrap();
                assert_eq!(j1, family_j(2, 2, &t0).unwrap());
                assert_eq!(j1, FieldElem::int_in(Field::Quadratic(seven), -3375));
            }
            other => panic!("expected isomorphic CM case, got {other:?}"),
        }

        // Degenerate parameters report the vanishing factor.
        assert_eq!(
            equal_j_case(13, &FieldElem::from_int(0)).unwrap(),
            EqualJCase::SingularJ { factor: "t".into() }
        );
        let gauss = Field::from_radicand(Some(-1)).unwrap();
        assert_eq!(
            equal_j_case(5, &elem(gauss, -11, 2)).unwrap(),
            EqualJCase::SingularJ { factor: "t^2 + 22t + 125".into() }
        );
    }

    #[test]
    fn special_j_pairs_and_kernel_identities() {
        let one = FieldElem::from_int(1);
        let (e1, e2) = special_j_pair(3, 0, &one).unwrap();
        assert_eq!(e1.discriminant(), FieldElem::from_int(-432));
        assert_eq!(e2.discriminant(), FieldElem::from_int(-314_928));
        assert!(e1.j_invariant().unwrap().is_zero());
        assert!(e2.j_invariant().unwrap().is_zero());
        let ratio = e2.discriminant().div(&e1.discriminant()).unwrap();
        assert_eq!(ratio, FieldElem::from_int(729));

        let (f1, f2) = special_j_pair(2, 1728, &one).unwrap();
        assert_eq!(f1.discriminant(), FieldElem::from_int(-64));
        assert_eq!(f2.discriminant(), FieldElem::from_int(4096));
        assert_eq!(f1.j_invariant().unwrap(), FieldElem::from_int(1728));
        assert_eq!(f2.j_invariant().unwrap(), FieldElem::from_int(1728));

        assert_eq!(special_j_pair(5, 0, &one), Err(Error::BadPair(5, 0)));
        assert_eq!(special_j_pair(3, 0, &FieldElem::from_int(0)), Err(Error::ZeroFamilyTwist));

        assert!(kernel_identity_check(3, 0).unwrap());
        assert!(kernel_identity_check(2, 1728).unwrap());
        assert_eq!(kernel_identity_check(5, 0), Err(Error::BadPair(5, 0)));
        // Negative controls: a wrong map constant must break the identity.
        assert!(!kernel_identity_holds(0, 5));
        assert!(!kernel_identity_holds(1728, 2));
    }

    #[test]
    fn fricke_swaps_hold_for_all_family_degrees() {
        for &p in &FAMILY_PRIMES {
            assert!(fricke_swap_check(p).unwrap(), "swap identity fails for p={p}");
        }
    }

    #[test]
    fn special_j_isogeny_counts_follow_cm_splitting() {
        for &p in &FAMILY_PRIMES {
            // In ℤ[ζ₃]: 3 ramifies; p ≡ 1 (mod 3) splits; p ≡ 2 (mod 3) is inert.
            let expected0 = if p == 3 {
                1
            } else if p % 3 == 1 {
                2
            } else {
                0
            };
            // In ℤ[i]: 2 ramifies; p ≡ 1 (mod 4) splits; p ≡ 3 (mod 4) is inert.
            let expected1728 = if p == 2 {
                1
            } else if p % 4 == 1 {
                2
            } else {
                0
            };
            assert_eq!(special_j_isogeny_count(p, 0).unwrap(), expected0);
            assert_eq!(special_j_isogeny_count(p, 1728).unwrap(), expected1728);
        }
        assert_eq!(special_j_isogeny_count(13, 1728).unwrap(), 2);
        assert!(special_j_isogeny_count(11, 0).is_err());
    }
}
