use crate::error::{AlgebraError, Result};
use crate::quat::Quat4;
use crate::scalar::{cross, dot, Scalar};

/// Coefficients `(alpha, beta, gamma)` with
/// `vec(R) = alpha A + beta B + gamma (A × B)`.
///
/// `A × B` is orthogonal (bilinearly) to both `A` and `B`, so `gamma` comes
/// from a single projection and `(alpha, beta)` from the 2×2 Gram system,
/// whose determinant equals `(A × B)·(A × B)`.
pub fn decompose_vector_part<T: Scalar>(a: &Quat4<T>, b: &Quat4<T>, r: &Quat4<T>) -> Result<(T, T, T)> {
    let normal = cross(&a.v, &b.v);
    let det = dot(&normal, &normal);
    let degenerate = match T::BACKEND {
        crate::Backend::Exact => det.is_zero(),
        crate::Backend::Float => {
            let scale = dot(&a.v, &a.v).modulus() * dot(&b.v, &b.v).modulus();
            det.is_negligible() || det.modulus() <= 1e-24 * scale
        }
    };
    if degenerate {
        return Err(AlgebraError::DegenerateFrame);
    }

    let inv = det.try_recip()?;
    let (aa, ab, bb) = (dot(&a.v, &a.v), dot(&a.v, &b.v), dot(&b.v, &b.v));
    let (ra, rb) = (dot(&r.v, &a.v), dot(&r.v, &b.v));
    let alpha = (ra.clone() * bb - rb.clone() * ab.clone()) * inv.clone();
    let beta = (rb * aa - ra * ab) * inv.clone();
    let gamma = dot(&r.v, &normal) * inv;
    Ok((alpha, beta, gamma))
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::scalar::{vadd, vscale, GaussianRational};

    type Q = Quat4<GaussianRational>;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_i64(re) + GaussianRational::i() * GaussianRational::from_i64(im)
    }

    #[test]
    fn le_result_has_no_cross_component() {
        let a = Q::from_ints(1, [1, 0, 0]);
        let b = Q::from_ints(13, [0, 0, 5]);
        let r = a.le_compose(&b).unwrap();
        assert_eq!(r, Q::from_ints(13, [12, 0, 5]));
        assert_eq!(decompose_vector_part(&a, &b, &r).unwrap(), (g(12, 0), g(1, 0), g(0, 0)));
    }

    #[test]
    fn rs_result_reads_off_its_structure() {
        let a = Q::from_ints(1, [1, 0, 0]);
        let b = Q::from_ints(13, [0, 0, 5]);
        let r = a.rs_compose(&b);
        assert_eq!(decompose_vector_part(&a, &b, &r).unwrap(), (g(13, 0), g(1, 0), g(0, 1)));
    }

    #[test]
    fn collinear_frames_are_rejected() {
        let a = Q::from_ints(1, [1, 2, 3]);
        let b = Q::from_ints(5, [-2, -4, -6]);
        assert_eq!(decompose_vector_part(&a, &b, &a), Err(AlgebraError::DegenerateFrame));
        let zero = Q::from_ints(2, [0, 0, 0]);
        assert_eq!(decompose_vector_part(&a, &zero, &a), Err(AlgebraError::DegenerateFrame));

        let fa = Quat4::<Complex64>::from_ints(1, [1, 2, 3]);
        let fb = fa.scale(&Complex64::new(-3.0, 0.0));
        assert_eq!(decompose_vector_part(&fa, &fb, &fa), Err(AlgebraError::DegenerateFrame));
    }

    #[test]
    fn reconstruction_is_exact() {
        let a = Q::new(g(1, 0), [g(2, 1), g(-1, 0), g(3, 0)]);
        let b = Q::new(g(0, 0), [g(0, 0), g(4, -2), g(1, 1)]);
        let r = Q::new(g(0, 0), [g(7, 3), g(-2, 5), g(1, -1)]);
        let (alpha, beta, gamma) = decompose_vector_part(&a, &b, &r).unwrap();
        let rebuilt = vadd(
            &vadd(&vscale(&alpha, &a.v), &vscale(&beta, &b.v)),
            &vscale(&gamma, &cross(&a.v, &b.v)),
        );
        assert_eq!(rebuilt, r.v);
    }
}
