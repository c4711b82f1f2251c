//! The expression language: parse once, evaluate in either backend.
//!
//! Run with `cargo run --example expression_eval`.

use recsym::expr::{evaluate, parse, Binding, Value};
use recsym::Backend;

fn main() {
    let x = match evaluate(&parse("(2; 1/2, -i, 3+4i)").unwrap(), &[], Backend::Exact) {
        Ok(Value::Quat(q)) => q,
        other => panic!("{other:?}"),
    };
    let bindings = [Binding::new("X", x)];

    for source in [
        "qform(le((1;1,0,0),(13;0,0,5)))",
        "rs((1;0,0,0), X)",
        "det(embed(X))",
        "qform(X)",
        "cross((0;1,0,0), (0;0,1,0))",
        "le(boost(3/5,0,0), boost(3/5,0,0))",
        "le((1;1,0,0),(2;1,1,0))",
        "det((1;0,0,0))",
        "le((1;1,0,0))",
    ] {
        let result = parse(source).and_then(|e| evaluate(&e, &bindings, Backend::Exact));
        match result {
            Ok(v) => println!("{source:<40} = {v}"),
            Err(e) => println!("{source:<40} ! {e}"),
        }
    }

    let float = evaluate(&parse("le((1;1,0,0),(2;1,1,0))").unwrap(), &[], Backend::Float).unwrap();
    println!("in float mode: {float}");
}
