//! Null spinors of the massless Dirac (Weyl) operator `E - sigma.p` with `E = |p|`.
//!
//! Run with `cargo run --example massless_dirac`.

use num_complex::Complex64;
use recsym::{massless_dirac, null_spinor, Scalar};

fn main() -> Result<(), recsym::AlgebraError> {
    for p in [[0.0, 0.0, 1.0], [0.0, 0.0, -2.0], [3.0, 4.0, 0.0], [1.0, -2.0, 2.0]] {
        let energy = p.iter().map(|x: &f64| x * x).sum::<f64>().sqrt();
        let psi = null_spinor(p)?;
        let op = massless_dirac(&Complex64::new(energy, 0.0), &p.map(|x| Complex64::new(x, 0.0)));
        let residual = op.apply(&psi).max_modulus();
        println!("p = {p:?}: psi = ({}, {}), |(E - sigma.p) psi| = {residual:.1e}", psi.c[0].render(), psi.c[1].render());
    }
    Ok(())
}
