//! Positivity certificates for polynomials on the nonnegative quadrant.
//!
//! A certificate writes the target as a sum of pieces that are visibly
//! nonnegative there: monomials times definite binary quadratic forms,
//! monomials times type-P binary forms, and a remainder with nonnegative
//! coefficients. An optional all-positive factor may be split off first.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::mpoly::{check_all_coeffs_nonnegative, check_all_coeffs_positive, IntMPoly, Var};
use crate::poly::RatPoly;
use crate::sturm::is_type_p;

#[derive(Clone, Debug, PartialEq)]
pub enum CertPiece {
    /// `X^i Y^j * (alpha X^(2p) + beta X^p Y^p + gamma Y^(2p))`.
    QuadraticForm { multiplier: [u32; 2], power: u32, alpha: BigInt, beta: BigInt, gamma: BigInt },
    /// `X^i Y^j * sum_k c_k X^k Y^(deg-k)`, with `sum_k c_k t^k` of type P.
    TypeP { multiplier: [u32; 2], coeffs: Vec<BigInt> },
}

impl CertPiece {
    pub fn quadratic(multiplier: [u32; 2], alpha: i64, beta: i64, gamma: i64) -> Self {
        CertPiece::QuadraticForm { multiplier, power: 1, alpha: alpha.into(), beta: beta.into(), gamma: gamma.into() }
    }

    pub fn quadratic_pow(multiplier: [u32; 2], power: u32, alpha: i64, beta: i64, gamma: i64) -> Self {
        CertPiece::QuadraticForm { multiplier, power, alpha: alpha.into(), beta: beta.into(), gamma: gamma.into() }
    }

    /// Coefficients ascending in `X` (so `coeffs[k]` multiplies `X^k Y^(deg-k)`).
    pub fn type_p(multiplier: [u32; 2], coeffs: &[i64]) -> Self {
        CertPiece::TypeP { multiplier, coeffs: coeffs.iter().map(|&c| c.into()).collect() }
    }

    /// Why the piece fails to be nonnegative, if it does.
    pub fn defect(&self) -> Option<String> {
        match self {
            CertPiece::QuadraticForm { power, alpha, beta, gamma, .. } => {
                if *power == 0 {
                    return Some("power must be at least 1".into());
                }
                if !alpha.is_positive() {
                    return Some(format!("alpha = {alpha} is not positive"));
                }
                let disc = beta * beta - BigInt::from(4) * alpha * gamma;
                (!disc.is_negative()).then(|| format!("discriminant {disc} is not negative"))
            }
            CertPiece::TypeP { coeffs, .. } => {
                let p = RatPoly::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect());
                (!is_type_p(&p)).then(|| "binary form is not of type P".to_string())
            }
        }
    }

    pub fn expand(&self, vars: &[Var]) -> IntMPoly {
        assert_eq!(vars.len(), 2, "certificates are binary");
        match self {
            CertPiece::QuadraticForm { multiplier: [i, j], power: p, alpha, beta, gamma } => IntMPoly::from_terms(
                vars,
                [
                    (vec![i + 2 * p, *j], alpha.clone()),
                    (vec![i + p, j + p], beta.clone()),
                    (vec![*i, j + 2 * p], gamma.clone()),
                ],
            ),
            CertPiece::TypeP { multiplier: [i, j], coeffs } => {
                let deg = coeffs.len() as u32 - 1;
                IntMPoly::from_terms(
                    vars,
                    coeffs.iter().enumerate().map(|(k, c)| (vec![i + k as u32, j + deg - k as u32], c.clone())),
                )
            }
        }
    }
}

impl fmt::Display for CertPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertPiece::QuadraticForm { multiplier, power, alpha, beta, gamma } => write!(
                f,
                "X^{}Y^{}*({alpha}*X^{p2}+{beta}*X^{power}*Y^{power}+{gamma}*Y^{p2})",
                multiplier[0],
                multiplier[1],
                p2 = 2 * power
            ),
            CertPiece::TypeP { multiplier, coeffs } => {
                let c: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                write!(f, "X^{}Y^{}*typeP[{}]", multiplier[0], multiplier[1], c.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticFormCertificate {
    pub vars: Vec<Var>,
    /// When present, the target equals `factor * (pieces + remainder)`.
    pub factor: Option<IntMPoly>,
    pub pieces: Vec<CertPiece>,
    pub remainder: IntMPoly,
}

impl QuadraticFormCertificate {
    /// Fill in the remainder so the pieces sum to `target` (after dividing out `factor`).
    pub fn complete(target: &IntMPoly, factor: Option<IntMPoly>, pieces: Vec<CertPiece>) -> Result<Self> {
        let vars = target.vars().to_vec();
        let base = match &factor {
            Some(f) => target
                .div_exact(f)?
                .ok_or_else(|| Error::Construction(format!("{f} does not divide the target")))?,
            None => target.clone(),
        };
        let mut rem = base;
        for p in &pieces {
            rem = rem.try_sub(&p.expand(&vars))?;
        }
        Ok(QuadraticFormCertificate { vars, factor, pieces, remainder: rem })
    }

    /// Sum of all pieces and the remainder, times the factor.
    pub fn expand(&self) -> Result<IntMPoly> {
        let mut sum = self.remainder.clone();
        for p in &self.pieces {
            sum = sum.try_add(&p.expand(&self.vars))?;
        }
        match &self.factor {
            Some(f) => f.try_mul(&sum),
            None => Ok(sum),
        }
    }

    /// Whether the certificate also proves strict positivity on the open quadrant.
    pub fn is_strict(&self) -> bool {
        !self.pieces.is_empty() || check_all_coeffs_positive(&self.remainder)
    }
}

/// Check every invariant of `cert` and that it sums to `target` exactly.
pub fn verify_certificate(target: &IntMPoly, cert: &QuadraticFormCertificate) -> Result<()> {
    if target.vars() != cert.vars.as_slice() || cert.remainder.vars() != cert.vars.as_slice() {
        return Err(Error::VariableMismatch(format!("{:?}", target.vars()), format!("{:?}", cert.vars)));
    }
    if let Some(f) = &cert.factor {
        if !check_all_coeffs_positive(f) {
            return Err(Error::FactorNotPositive(f.clone()));
        }
    }
    for (index, p) in cert.pieces.iter().enumerate() {
        if let Some(reason) = p.defect() {
            return Err(Error::CertificatePiece { index, reason });
        }
    }
    if !check_all_coeffs_nonnegative(&cert.remainder) {
        return Err(Error::NegativeRemainder(cert.remainder.clone()));
    }
    let residual = target.try_sub(&cert.expand()?)?;
    if !residual.is_zero() {
        return Err(Error::CertificateMismatch { residual });
    }
    Ok(())
}

/// Type-P test for a polynomial in a single variable.
pub fn check_type_p(p: &IntMPoly) -> bool {
    let occurring: Vec<Var> = p.vars().iter().copied().filter(|&v| p.degree_in(v) > 0).collect();
    let coeffs = match occurring.as_slice() {
        [] => p.as_univariate(p.vars().first().copied().unwrap_or(Var::V)),
        [x] => p.as_univariate(*x),
        _ => None,
    };
    let Some(coeffs) = coeffs else { return false };
    if coeffs.iter().all(|c| c.is_zero()) {
        return false;
    }
    is_type_p(&RatPoly::new(coeffs.into_iter().map(BigRational::from_integer).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const VW: [Var; 2] = [Var::V, Var::W];

    fn q(s: &str) -> IntMPoly {
        IntMPoly::parse_in(s, &VW).unwrap()
    }

    #[test]
    fn single_quadratic_form() {
        let target = q("28224*V^2+-9408*V*W+28224*W^2+3*V+7");
        let cert = QuadraticFormCertificate::complete(&target, None, vec![CertPiece::quadratic([0, 0], 28224, -9408, 28224)]).unwrap();
        assert_eq!(cert.remainder, q("3*V+7"));
        verify_certificate(&target, &cert).unwrap();
    }

    #[test]
    fn off_by_one_reports_residual() {
        let target = q("28224*V^2+-9408*V*W+28224*W^2+3*V+7");
        let mut cert = QuadraticFormCertificate::complete(&target, None, vec![CertPiece::quadratic([0, 0], 28224, -9408, 28224)]).unwrap();
        cert.remainder = q("3*V+8");
        match verify_certificate(&target, &cert) {
            Err(Error::CertificateMismatch { residual }) => assert_eq!(residual.to_string(), "-1"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn indefinite_form_rejected() {
        let target = q("V^2+-3*V*W+W^2");
        let cert = QuadraticFormCertificate::complete(&target, None, vec![CertPiece::quadratic([0, 0], 1, -3, 1)]).unwrap();
        assert!(matches!(verify_certificate(&target, &cert), Err(Error::CertificatePiece { index: 0, .. })));
    }

    #[test]
    fn negative_remainder_rejected() {
        let target = q("V^2+W^2+-1*V");
        let cert = QuadraticFormCertificate::complete(&target, None, vec![CertPiece::quadratic([0, 0], 1, 0, 1)]).unwrap();
        assert!(matches!(verify_certificate(&target, &cert), Err(Error::NegativeRemainder(_))));
    }

    #[test]
    fn type_p_pieces() {
        assert!(check_type_p(&IntMPoly::univariate(Var::V, &[221130, -30618, -30618, 221130])));
        assert!(!check_type_p(&IntMPoly::univariate(Var::V, &[-1, 1])));
        assert!(check_type_p(&IntMPoly::univariate(Var::V, &[1, 1, 1])));
        let piece = CertPiece::type_p([0, 0], &[221130, -30618, -30618, 221130]);
        assert!(piece.defect().is_none());
        assert_eq!(piece.expand(&VW), q("221130*V^3+-30618*V^2*W+-30618*V*W^2+221130*W^3"));
    }

    #[test]
    fn factored_certificate() {
        let factor = q("V+1");
        let inner = q("2*V^2+-1*V*W+2*W^2+V");
        let target = &factor * &inner;
        let cert = QuadraticFormCertificate::complete(&target, Some(factor), vec![CertPiece::quadratic([0, 0], 2, -1, 2)]).unwrap();
        verify_certificate(&target, &cert).unwrap();
        assert!(cert.is_strict());
    }
}
