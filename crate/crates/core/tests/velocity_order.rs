//! Pins which operand order of `le_compose` matches which order of
//! `einstein_add`. The composed boost of `le(boost(u), boost(v))` carries
//! the velocity `v (+) u`; the opposite order only agrees for collinear pairs.

use recsym::{boost_from_velocity, einstein_add, velocity_from_boost, Velocity3};

fn le_velocity(u: Velocity3, v: Velocity3) -> Velocity3 {
    let composed = boost_from_velocity(u).unwrap().le_compose(&boost_from_velocity(v).unwrap()).unwrap();
    velocity_from_boost(&composed).unwrap()
}

fn distance(a: Velocity3, b: Velocity3) -> f64 {
    (0..3).map(|k| (a.0[k] - b.0[k]).abs()).fold(0.0, f64::max)
}

#[test]
fn le_of_boosts_is_einstein_add_with_operands_swapped() {
    let u = Velocity3::new(0.5, 0.0, 0.0);
    let v = Velocity3::new(0.0, 0.6, 0.0);
    let w = le_velocity(u, v);
    assert!(distance(w, einstein_add(v, u).unwrap()) < 1e-14, "{w:?}");
    assert!(distance(w, einstein_add(u, v).unwrap()) > 1e-2, "{w:?}");
}

#[test]
fn perpendicular_case_by_hand() {
    // v (+) u with u = 0.5 x, v = 0.6 y: u.v = 0, gamma_v = 5/4, so the
    // result is (u / gamma_v) + v = (0.4, 0.6, 0).
    let w = le_velocity(Velocity3::new(0.5, 0.0, 0.0), Velocity3::new(0.0, 0.6, 0.0));
    assert!(distance(w, Velocity3::new(0.4, 0.6, 0.0)) < 1e-14, "{w:?}");
}

#[test]
fn collinear_pairs_agree_in_both_orders() {
    let u = Velocity3::new(0.3, 0.0, 0.0);
    let v = Velocity3::new(-0.7, 0.0, 0.0);
    assert!(distance(le_velocity(u, v), le_velocity(v, u)) < 1e-14);
    assert!(distance(le_velocity(u, v), einstein_add(u, v).unwrap()) < 1e-14);
}
