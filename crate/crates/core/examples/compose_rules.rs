//! The two composition rules side by side, in exact arithmetic.
//!
//! Run with `cargo run --example compose_rules`.

use recsym::{GaussianRational, Quat4, Rule};

type Q = Quat4<GaussianRational>;

fn main() -> Result<(), recsym::AlgebraError> {
    // Both have perfect-square radicands a0^2 - A.A (16 and 64), so le works
    // exactly in either order.
    let a = Q::from_ints(5, [1, 2, 2]);
    let b = Q::from_ints(10, [-2, 4, 4]);

    for rule in [Rule::LorentzEinstein, Rule::ReciprocalSymmetric] {
        let ab = a.compose(&b, rule)?;
        let ba = b.compose(&a, rule)?;
        println!("{}:", rule.name());
        println!("  A*B = {ab}");
        println!("  B*A = {ba}");
        println!("  qform(A*B) = {}  qform(A) qform(B) = {}", ab.qform(), a.qform() * b.qform());
        println!("  conj(A) * A = {}", a.conj().compose(&a, rule)?);
    }

    // An isotropic right operand (b0^2 = B.B) still composes under le.
    let null = Q::from_ints(13, [0, 0, 5]);
    let x = Q::from_ints(1, [1, 0, 0]).le_compose(&null)?;
    println!("le((1;1,0,0), (13;0,0,5)) = {x}, qform = {}", x.qform());

    // Exact mode refuses irrational square roots instead of rounding.
    match Q::from_ints(1, [1, 0, 0]).le_compose(&Q::from_ints(2, [1, 1, 0])) {
        Ok(q) => println!("unexpected: {q}"),
        Err(e) => println!("le((1;1,0,0), (2;1,1,0)) in exact mode: {e}"),
    }
    Ok(())
}
