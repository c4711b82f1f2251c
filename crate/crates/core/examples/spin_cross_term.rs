//! The rs product of two pure vectors carries `i B x C`; the le product of
//! real 4-vectors stays in the plane of its operands.
//!
//! Run with `cargo run --example spin_cross_term`.

use recsym::checker::decompose_vector_part;
use recsym::pauli::cross_term;
use recsym::{GaussianRational, Quat4};

type Q = Quat4<GaussianRational>;

fn main() -> Result<(), recsym::AlgebraError> {
    let b = Q::from_ints(0, [1, 2, 0]);
    let c = Q::from_ints(0, [0, 1, 3]);
    let (scalar, vector) = cross_term(&b.v, &c.v);
    println!("(sigma.B)(sigma.C) = (B.C) + i sigma.(B x C)");
    println!("  B.C = {scalar}, i B x C = ({}, {}, {})", vector[0], vector[1], vector[2]);

    let a = Q::from_ints(3, [1, 2, 0]);
    let r = Q::from_ints(13, [4, 0, 12]);
    let le = a.le_compose(&r)?;
    let rs = a.rs_compose(&r);
    let (alpha, beta, gamma) = decompose_vector_part(&a, &r, &le)?;
    println!("vec(le(A, B)) = {alpha} A + {beta} B + {gamma} (A x B)");
    let (alpha, beta, gamma) = decompose_vector_part(&a, &r, &rs)?;
    println!("vec(rs(A, B)) = {alpha} A + {beta} B + {gamma} (A x B)");
    Ok(())
}
