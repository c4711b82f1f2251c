//! The Pauli embedding turns rs composition into matrix multiplication.
//!
//! Run with `cargo run --example pauli_homomorphism`.

use recsym::pauli::{embed, extract, sigma};
use recsym::{GaussianRational, Mat2, Quat4, Scalar};

type G = GaussianRational;

fn main() -> Result<(), recsym::AlgebraError> {
    let s: Vec<Mat2<G>> = (0..4).map(sigma).collect::<Result<_, _>>()?;
    for (k, m) in s.iter().enumerate().skip(1) {
        println!("sigma{k} = {m}   sigma{k}^2 = {}", m.mat_mul(m));
    }
    println!("sigma1 sigma2 = {}  (= i sigma3)", s[1].mat_mul(&s[2]));

    let half = G::from_ratio(1, 2);
    let a = Quat4::new(G::one(), [half.clone(), G::i(), G::from_i64(-2)]);
    let b = Quat4::new(G::from_i64(3), [G::zero(), half, G::one() + G::i()]);

    let product = embed(&a).mat_mul(&embed(&b));
    let composed = embed(&a.rs_compose(&b));
    println!("embed(A) embed(B) = {product}");
    println!("embed(A (x) B)    = {composed}");
    println!("equal: {}", product == composed);
    println!("det(embed A) = {}, qform(A) = {}", embed(&a).det(), a.qform());
    println!("extract(embed A) = {}", extract(&embed(&a)));
    Ok(())
}
