//! Group arithmetic in the central extensions of `T x Z^r` attached to a
//! Gram form, their loop-rotation semidirect products, and the exact
//! analytic 2-cocycle for affine-linear loops.
//!
//! Scalars live in the nonzero rationals: every identity checked here is an
//! identity of rational functions, so verifying it on rational points with
//! exact arithmetic decides it. The rotation coordinate is always carried as
//! a square root `s` with `theta = s^2`, which makes the half-integer
//! exponents of the basic variant exact without any evenness assumption on
//! the form.

use crate::lattice::{GramForm, LatticeError, LatticeVector, RationalVector};
use crate::scalar::{pow_rat_scalar, Scalar};
use crate::Int;
use num_rational::Ratio;
use num_traits::{One, Zero};
use std::ops::{Add, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("elements belong to different extension variants")]
    VariantMismatch,
    #[error("scalar coordinates must be nonzero")]
    ZeroScalar,
}

/// Which central extension: the basic cocycle or its antisymmetric double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    B,
    TwoB,
}

/// Element `(w, t, lambda)` of the central extension: central coordinate,
/// torus coordinate, and cocharacter coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtElement<I: Scalar = Int> {
    pub variant: Variant,
    pub w: Ratio<I>,
    pub t: Vec<Ratio<I>>,
    pub lambda: LatticeVector<I>,
}

impl<I: Scalar> ExtElement<I> {
    pub fn new(
        variant: Variant,
        w: Ratio<I>,
        t: Vec<Ratio<I>>,
        lambda: LatticeVector<I>,
    ) -> Result<Self, ExtError> {
        if w.is_zero() || t.iter().any(Ratio::is_zero) {
            return Err(ExtError::ZeroScalar);
        }
        if t.len() != lambda.dim() {
            return Err(LatticeError::DimensionMismatch {
                expected: t.len(),
                got: lambda.dim(),
            }
            .into());
        }
        Ok(ExtElement {
            variant,
            w,
            t,
            lambda,
        })
    }

    pub fn identity(variant: Variant, r: usize) -> Self {
        ExtElement {
            variant,
            w: Ratio::one(),
            t: vec![Ratio::one(); r],
            lambda: LatticeVector::zero(r),
        }
    }

    pub fn rank(&self) -> usize {
        self.t.len()
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_one()
            && self.t.iter().all(Ratio::is_one)
            && self.lambda.0.iter().all(Zero::is_zero)
    }
}

/// Element of the loop-rotation semidirect product. The rotation coordinate
/// is `theta = s^2`; tracking `s` realizes the double cover needed to act on
/// the basic variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectElement<I: Scalar = Int> {
    pub s: Ratio<I>,
    pub g: ExtElement<I>,
}

impl<I: Scalar> SemidirectElement<I> {
    pub fn new(s: Ratio<I>, g: ExtElement<I>) -> Result<Self, ExtError> {
        if s.is_zero() {
            return Err(ExtError::ZeroScalar);
        }
        Ok(SemidirectElement { s, g })
    }

    pub fn identity(variant: Variant, r: usize) -> Self {
        SemidirectElement {
            s: Ratio::one(),
            g: ExtElement::identity(variant, r),
        }
    }
}

/// Affine-linear loop `x -> base + winding * x`, the exponent data of a loop
/// of the compact torus with value `base` at 0 and integral winding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLoop<I: Scalar = Int> {
    pub base: RationalVector<I>,
    pub winding: LatticeVector<I>,
}

/// Exact element `q0 + qpi * pi` of the rank-two rational span of `{1, pi}`;
/// equality is componentwise, no transcendental arithmetic happens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRational<I: Scalar = Int> {
    pub rational: Ratio<I>,
    pub pi: Ratio<I>,
}

impl<I: Scalar> PiRational<I> {
    pub fn zero() -> Self {
        PiRational {
            rational: Ratio::zero(),
            pi: Ratio::zero(),
        }
    }
}

impl<I: Scalar> Add for PiRational<I> {
    type Output = PiRational<I>;
    fn add(self, rhs: Self) -> Self {
        PiRational {
            rational: self.rational + rhs.rational,
            pi: self.pi + rhs.pi,
        }
    }
}

impl<I: Scalar> Sub for PiRational<I> {
    type Output = PiRational<I>;
    fn sub(self, rhs: Self) -> Self {
        PiRational {
            rational: self.rational - rhs.rational,
            pi: self.pi - rhs.pi,
        }
    }
}

impl<I: Scalar> Neg for PiRational<I> {
    type Output = PiRational<I>;
    fn neg(self) -> Self {
        PiRational {
            rational: -self.rational,
            pi: -self.pi,
        }
    }
}

/// Evaluates the character `B(lambda, -)` at the torus point `t`:
/// the product of `t_i` to the power `(B lambda)_i`.
pub fn char_value<I: Scalar>(
    b: &GramForm<I>,
    lambda: &LatticeVector<I>,
    t: &[Ratio<I>],
) -> Result<Ratio<I>, ExtError> {
    let dual = b.dual_map(lambda)?;
    if t.len() != dual.0.len() {
        return Err(LatticeError::DimensionMismatch {
            expected: dual.0.len(),
            got: t.len(),
        }
        .into());
    }
    let mut acc = Ratio::one();
    for (ti, e) in t.iter().zip(&dual.0) {
        acc *= pow_rat_scalar(ti, e);
    }
    Ok(acc)
}

/// The 2-cocycle of the chosen variant on the base group `T x Z^r`.
///
/// Variant `B` sends `((t1, l1), (t2, l2))` to `l2^vee(t1)`; the double
/// sends it to `l2^vee(t1) * l1^vee(t2)^{-1}`.
pub fn cocycle<I: Scalar>(
    b: &GramForm<I>,
    variant: Variant,
    t1: &[Ratio<I>],
    lambda1: &LatticeVector<I>,
    t2: &[Ratio<I>],
    lambda2: &LatticeVector<I>,
) -> Result<Ratio<I>, ExtError> {
    let main = char_value(b, lambda2, t1)?;
    match variant {
        Variant::B => Ok(main),
        Variant::TwoB => {
            let twist = char_value(b, lambda1, t2)?;
            Ok(main / twist)
        }
    }
}

/// Verifies the 2-cocycle identity `c(g1,g2) c(g1 g2, g3) = c(g1, g2 g3) c(g2, g3)`.
pub fn cocycle_identity_check<I: Scalar>(
    b: &GramForm<I>,
    variant: Variant,
    g1: (&[Ratio<I>], &LatticeVector<I>),
    g2: (&[Ratio<I>], &LatticeVector<I>),
    g3: (&[Ratio<I>], &LatticeVector<I>),
) -> Result<bool, ExtError> {
    let prod = |a: (&[Ratio<I>], &LatticeVector<I>), c: (&[Ratio<I>], &LatticeVector<I>)| {
        let t: Vec<Ratio<I>> =
            a.0.iter()
                .zip(c.0)
                .map(|(x, y)| x.clone() * y.clone())
                .collect();
        (t, a.1.add(c.1))
    };
    let g12 = prod(g1, g2);
    let g23 = prod(g2, g3);
    let lhs = cocycle(b, variant, g1.0, g1.1, g2.0, g2.1)?
        * cocycle(b, variant, &g12.0, &g12.1, g3.0, g3.1)?;
    let rhs = cocycle(b, variant, g1.0, g1.1, &g23.0, &g23.1)?
        * cocycle(b, variant, g2.0, g2.1, g3.0, g3.1)?;
    Ok(lhs == rhs)
}

/// The star product `(w1, g1) (w2, g2) = (w1 w2 c(g1, g2), g1 g2)`.
pub fn mul<I: Scalar>(
    b: &GramForm<I>,
    a: &ExtElement<I>,
    c: &ExtElement<I>,
) -> Result<ExtElement<I>, ExtError> {
    if a.variant != c.variant {
        return Err(ExtError::VariantMismatch);
    }
    if a.rank() != c.rank() {
        return Err(LatticeError::DimensionMismatch {
            expected: a.rank(),
            got: c.rank(),
        }
        .into());
    }
    let coc = cocycle(b, a.variant, &a.t, &a.lambda, &c.t, &c.lambda)?;
    Ok(ExtElement {
        variant: a.variant,
        w: a.w.clone() * c.w.clone() * coc,
        t: a.t
            .iter()
            .zip(&c.t)
            .map(|(x, y)| x.clone() * y.clone())
            .collect(),
        lambda: a.lambda.add(&c.lambda),
    })
}

/// Group inverse: torus and cocharacter coordinates invert, and the central
/// coordinate picks up the inverse cocycle value `c(g, g^{-1})^{-1}`.
pub fn inv<I: Scalar>(b: &GramForm<I>, a: &ExtElement<I>) -> Result<ExtElement<I>, ExtError> {
    let t_inv: Vec<Ratio<I>> = a.t.iter().map(Ratio::recip).collect();
    let l_inv = a.lambda.neg();
    let coc = cocycle(b, a.variant, &a.t, &a.lambda, &t_inv, &l_inv)?;
    Ok(ExtElement {
        variant: a.variant,
        w: (a.w.clone() * coc).recip(),
        t: t_inv,
        lambda: l_inv,
    })
}

/// Conjugation by the rotation `theta = s^2`. The torus coordinate picks up
/// `lambda(theta)` componentwise; in the basic variant the central
/// coordinate is multiplied by `s^{B(lambda,lambda)}`, the exact form of
/// `theta^{B(lambda,lambda)/2}`.
pub fn rotate_conj<I: Scalar>(
    b: &GramForm<I>,
    s: &Ratio<I>,
    a: &ExtElement<I>,
) -> Result<ExtElement<I>, ExtError> {
    if s.is_zero() {
        return Err(ExtError::ZeroScalar);
    }
    let theta = s.clone() * s.clone();
    let t: Vec<Ratio<I>> =
        a.t.iter()
            .zip(&a.lambda.0)
            .map(|(ti, li)| ti.clone() * pow_rat_scalar(&theta, li))
            .collect();
    let w = match a.variant {
        Variant::TwoB => a.w.clone(),
        Variant::B => {
            let norm = b.norm2_int(&a.lambda)?;
            a.w.clone() * pow_rat_scalar(s, &norm)
        }
    };
    Ok(ExtElement {
        variant: a.variant,
        w,
        t,
        lambda: a.lambda.clone(),
    })
}

/// Checks that conjugation by a fixed rotation is a group homomorphism:
/// `theta (a b) theta^{-1} = (theta a theta^{-1})(theta b theta^{-1})`.
pub fn lift_constraint_check<I: Scalar>(
    b: &GramForm<I>,
    s: &Ratio<I>,
    a: &ExtElement<I>,
    c: &ExtElement<I>,
) -> Result<bool, ExtError> {
    let lhs = rotate_conj(b, s, &mul(b, a, c)?)?;
    let rhs = mul(b, &rotate_conj(b, s, a)?, &rotate_conj(b, s, c)?)?;
    Ok(lhs == rhs)
}

/// Semidirect product `(s1, g1)(s2, g2) = (s1 s2, (theta2^{-1} g1 theta2) g2)`:
/// the left factor is rotated by the inverse of the right rotation before
/// the star product.
pub fn semidirect_mul<I: Scalar>(
    b: &GramForm<I>,
    x: &SemidirectElement<I>,
    y: &SemidirectElement<I>,
) -> Result<SemidirectElement<I>, ExtError> {
    let rotated = rotate_conj(b, &y.s.clone().recip(), &x.g)?;
    Ok(SemidirectElement {
        s: x.s.clone() * y.s.clone(),
        g: mul(b, &rotated, &y.g)?,
    })
}

/// Inverse in the semidirect product.
pub fn semidirect_inv<I: Scalar>(
    b: &GramForm<I>,
    x: &SemidirectElement<I>,
) -> Result<SemidirectElement<I>, ExtError> {
    let rotated = rotate_conj(b, &x.s, &x.g)?;
    Ok(SemidirectElement {
        s: x.s.clone().recip(),
        g: inv(b, &rotated)?,
    })
}

/// The analytic 2-cocycle evaluated on affine-linear loops, in closed form.
///
/// For `f = a + Df x`, `g = c + Dg x` on `[0, 2 pi]` the integral part is a
/// degree-one polynomial integrated exactly, giving
/// `S(f, g) = B(Df, c) + (pi / 2) B(Df, Dg)`.
pub fn analytic_s<I: Scalar>(
    b: &GramForm<I>,
    f: &AffineLoop<I>,
    g: &AffineLoop<I>,
) -> Result<PiRational<I>, ExtError> {
    let df = f.winding.to_rational();
    let dg = g.winding.to_rational();
    let rational = b.pairing(&df, &g.base)?;
    let pi = b.pairing(&df, &dg)? / Ratio::from_integer(I::from(2));
    Ok(PiRational { rational, pi })
}

/// Antisymmetrizes the analytic cocycle and checks it against the double
/// algebraic cocycle: the `pi` component must vanish and the rational
/// component must equal `B(Df, c) - B(Dg, a)`.
pub fn analytic_antisym_check<I: Scalar>(
    b: &GramForm<I>,
    f: &AffineLoop<I>,
    g: &AffineLoop<I>,
) -> Result<bool, ExtError> {
    let s_fg = analytic_s(b, f, g)?;
    let s_gf = analytic_s(b, g, f)?;
    let double = s_fg - s_gf;
    let expect = b.pairing(&f.winding.to_rational(), &g.base)?
        - b.pairing(&g.winding.to_rational(), &f.base)?;
    Ok(double.pi.is_zero() && double.rational == expect)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Int;

    fn b1() -> GramForm<Int> {
        GramForm::from_i32(&[&[1]]).unwrap()
    }

    fn hex() -> GramForm<Int> {
        GramForm::from_i32(&[&[2, -1], &[-1, 2]]).unwrap()
    }

    fn lv(coords: &[i32]) -> LatticeVector<Int> {
        LatticeVector::from_i32(coords)
    }

    fn torus(b: &GramForm<Int>, variant: Variant, t: &[(i32, i32)]) -> ExtElement<Int> {
        let _ = b;
        ExtElement::new(
            variant,
            Ratio::one(),
            t.iter().map(|&(n, d)| rat(n, d)).collect(),
            LatticeVector::zero(t.len()),
        )
        .unwrap()
    }

    fn cochar(variant: Variant, l: &[i32]) -> ExtElement<Int> {
        ExtElement::new(variant, Ratio::one(), vec![Ratio::one(); l.len()], lv(l)).unwrap()
    }

    fn commutator(b: &GramForm<Int>, x: &ExtElement<Int>, y: &ExtElement<Int>) -> ExtElement<Int> {
        let xy = mul(b, x, y).unwrap();
        let xyx = mul(b, &xy, &inv(b, x).unwrap()).unwrap();
        mul(b, &xyx, &inv(b, y).unwrap()).unwrap()
    }

    #[test]
    fn cocycle_examples() {
        let b = hex();
        let t1 = vec![rat::<Int>(2, 1), rat(3, 1)];
        let c = cocycle(
            &b,
            Variant::B,
            &t1,
            &lv(&[0, 0]),
            &[rat(1, 1), rat(1, 1)],
            &lv(&[1, 0]),
        )
        .unwrap();
        assert_eq!(c, rat(4, 3));

        let c = cocycle(
            &b,
            Variant::B,
            &t1,
            &lv(&[0, 0]),
            &[rat(1, 1), rat(1, 1)],
            &lv(&[0, 0]),
        )
        .unwrap();
        assert_eq!(c, rat(1, 1));

        let b = b1();
        let c = cocycle(
            &b,
            Variant::TwoB,
            &[rat(5, 1)],
            &lv(&[0]),
            &[rat(7, 1)],
            &lv(&[2]),
        )
        .unwrap();
        assert_eq!(c, rat(25, 1));
    }

    #[test]
    fn identity_and_inverse_laws() {
        let b = b1();
        for variant in [Variant::B, Variant::TwoB] {
            let e = ExtElement::identity(variant, 1);
            let a = ExtElement::new(variant, rat(3, 2), vec![rat(5, 1)], lv(&[1])).unwrap();
            assert_eq!(mul(&b, &e, &a).unwrap(), a);
            assert_eq!(mul(&b, &a, &e).unwrap(), a);
            assert!(mul(&b, &a, &inv(&b, &a).unwrap()).unwrap().is_identity());
            assert!(mul(&b, &inv(&b, &a).unwrap(), &a).unwrap().is_identity());
            assert_eq!(inv(&b, &inv(&b, &a).unwrap()).unwrap(), a);
        }
    }

    #[test]
    fn inverse_central_coordinate_example() {
        let b = b1();
        let a = ExtElement::new(Variant::B, Ratio::one(), vec![rat(5, 1)], lv(&[1])).unwrap();
        let ai = inv(&b, &a).unwrap();
        assert_eq!(ai.w, rat(5, 1));
        assert_eq!(ai.t, vec![rat(1, 5)]);
        assert_eq!(ai.lambda, lv(&[-1]));
    }

    #[test]
    fn commutator_separates_the_variants() {
        let b = b1();
        let comm_b = commutator(
            &b,
            &cochar(Variant::B, &[1]),
            &torus(&b, Variant::B, &[(5, 1)]),
        );
        assert_eq!(comm_b.w, rat(1, 5));
        assert!(comm_b.lambda.0.iter().all(num_traits::Zero::is_zero));
        assert!(comm_b.t.iter().all(num_traits::One::is_one));

        let comm_2b = commutator(
            &b,
            &cochar(Variant::TwoB, &[1]),
            &torus(&b, Variant::TwoB, &[(5, 1)]),
        );
        assert_eq!(comm_2b.w, rat(1, 25));
        assert_ne!(comm_b.w, comm_2b.w);
    }

    #[test]
    fn variant_and_dimension_mismatches() {
        let b = b1();
        let x = cochar(Variant::B, &[1]);
        let y = cochar(Variant::TwoB, &[1]);
        assert_eq!(mul(&b, &x, &y).unwrap_err(), ExtError::VariantMismatch);
        assert!(ExtElement::<Int>::new(Variant::B, Ratio::zero(), vec![], lv(&[])).is_err());
    }

    #[test]
    fn cocycle_identity_with_trivial_last_factor() {
        let b = hex();
        let t1 = vec![rat::<Int>(2, 1), rat(3, 1)];
        let t2 = vec![rat::<Int>(1, 2), rat(7, 1)];
        let e = vec![rat::<Int>(1, 1), rat(1, 1)];
        for variant in [Variant::B, Variant::TwoB] {
            assert!(cocycle_identity_check(
                &b,
                variant,
                (&t1, &lv(&[1, -2])),
                (&t2, &lv(&[0, 3])),
                (&e, &lv(&[0, 0])),
            )
            .unwrap());
        }
    }

    #[test]
    fn rotation_examples() {
        let b = b1();
        let a = ExtElement::new(Variant::B, Ratio::one(), vec![rat(1, 1)], lv(&[1])).unwrap();
        let rotated = rotate_conj(&b, &rat(2, 1), &a).unwrap();
        assert_eq!(rotated.w, rat(2, 1));
        assert_eq!(rotated.t, vec![rat(4, 1)]);
        assert_eq!(rotated.lambda, lv(&[1]));

        let a = ExtElement::new(Variant::TwoB, Ratio::one(), vec![rat(1, 1)], lv(&[1])).unwrap();
        let rotated = rotate_conj(&b, &rat(2, 1), &a).unwrap();
        assert_eq!(rotated.w, rat(1, 1));
        assert_eq!(rotated.t, vec![rat(4, 1)]);

        let fixed = ExtElement::new(Variant::B, rat(3, 1), vec![rat(7, 2)], lv(&[0])).unwrap();
        assert_eq!(rotate_conj(&b, &rat(9, 5), &fixed).unwrap(), fixed);
    }

    #[test]
    fn rotation_is_homomorphism_in_s() {
        let b = hex();
        let a = ExtElement::new(
            Variant::B,
            rat(2, 3),
            vec![rat(5, 1), rat(1, 7)],
            lv(&[2, -1]),
        )
        .unwrap();
        let s1 = rat::<Int>(3, 2);
        let s2 = rat::<Int>(-2, 5);
        let both = rotate_conj(&b, &(s1.clone() * s2.clone()), &a).unwrap();
        let seq = rotate_conj(&b, &s1, &rotate_conj(&b, &s2, &a).unwrap()).unwrap();
        assert_eq!(both, seq);
    }

    #[test]
    fn lift_constraint_trivial_rotation() {
        let b = hex();
        let a = ExtElement::new(
            Variant::B,
            rat(1, 2),
            vec![rat(3, 1), rat(4, 1)],
            lv(&[1, 1]),
        )
        .unwrap();
        let c = ExtElement::new(
            Variant::B,
            rat(5, 1),
            vec![rat(1, 3), rat(2, 1)],
            lv(&[0, -2]),
        )
        .unwrap();
        assert!(lift_constraint_check(&b, &Ratio::one(), &a, &c).unwrap());
        assert!(lift_constraint_check(&b, &rat(7, 3), &a, &c).unwrap());
    }

    #[test]
    fn semidirect_identity_and_defining_relation() {
        let b = b1();
        let g = ExtElement::new(Variant::TwoB, rat(2, 1), vec![rat(3, 1)], lv(&[1])).unwrap();
        let x = SemidirectElement::new(rat(5, 2), g.clone()).unwrap();
        let e = SemidirectElement::identity(Variant::TwoB, 1);
        assert_eq!(semidirect_mul(&b, &x, &e).unwrap(), x);
        assert_eq!(semidirect_mul(&b, &e, &x).unwrap(), x);

        let xi = semidirect_inv(&b, &x).unwrap();
        let prod = semidirect_mul(&b, &x, &xi).unwrap();
        assert!(prod.s.is_one() && prod.g.is_identity());

        // (1, g) (s, 1) = (s, 1) (1, theta^{-1} g theta).
        let s = rat::<Int>(3, 1);
        let lhs = semidirect_mul(
            &b,
            &SemidirectElement::new(Ratio::one(), g.clone()).unwrap(),
            &SemidirectElement::new(s.clone(), ExtElement::identity(Variant::TwoB, 1)).unwrap(),
        )
        .unwrap();
        let rhs = semidirect_mul(
            &b,
            &SemidirectElement::new(s.clone(), ExtElement::identity(Variant::TwoB, 1)).unwrap(),
            &SemidirectElement::new(Ratio::one(), rotate_conj(&b, &s.recip(), &g).unwrap())
                .unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn analytic_cocycle_closed_form() {
        let b = b1();
        // Winding zero kills both terms.
        let f = AffineLoop {
            base: RationalVector(vec![rat(7, 3)]),
            winding: lv(&[0]),
        };
        let g = AffineLoop {
            base: RationalVector(vec![rat(1, 2)]),
            winding: lv(&[4]),
        };
        assert_eq!(analytic_s(&b, &f, &g).unwrap(), PiRational::zero());

        let f = AffineLoop {
            base: RationalVector(vec![rat(9, 4)]),
            winding: lv(&[1]),
        };
        let g = AffineLoop {
            base: RationalVector(vec![rat(0, 1)]),
            winding: lv(&[1]),
        };
        let s = analytic_s(&b, &f, &g).unwrap();
        assert_eq!(s.rational, rat(0, 1));
        assert_eq!(s.pi, rat(1, 2));

        let b = hex();
        let f = AffineLoop {
            base: RationalVector(vec![rat(0, 1), rat(0, 1)]),
            winding: lv(&[1, 0]),
        };
        let g = AffineLoop {
            base: RationalVector(vec![rat(1, 1), rat(1, 1)]),
            winding: lv(&[0, 0]),
        };
        let s = analytic_s(&b, &f, &g).unwrap();
        assert_eq!(s.rational, rat(1, 1));
        assert_eq!(s.pi, rat(0, 1));
    }

    #[test]
    fn antisymmetrization_matches_double_cocycle() {
        let b = b1();
        let f = AffineLoop {
            base: RationalVector(vec![rat(0, 1)]),
            winding: lv(&[1]),
        };
        let g = AffineLoop {
            base: RationalVector(vec![rat(1, 3)]),
            winding: lv(&[2]),
        };
        assert!(analytic_antisym_check(&b, &f, &g).unwrap());
        let s = analytic_s(&b, &f, &g).unwrap() - analytic_s(&b, &g, &f).unwrap();
        assert_eq!(s.rational, rat(1, 3));
        assert_eq!(s.pi, rat(0, 1));

        // f = g antisymmetrizes to zero.
        let d = analytic_s(&b, &f, &f).unwrap() - analytic_s(&b, &f, &f).unwrap();
        assert_eq!(d, PiRational::zero());
    }
}
