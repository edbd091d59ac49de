//! Fixture systems shared by the benchmarks.

use apolar_core::PolynomialSystem;

/// `(name, variables, generators)` for each benchmark system.
pub const SYSTEMS: &[(&str, &[&str], &[&str])] = &[
    ("simple", &["x", "y"], &["x", "y"]),
    ("tangent_cusp", &["x", "y"], &["x^2 - y", "y^2"]),
    ("circle_line", &["x", "y"], &["x^2 + y^2 - 1", "y"]),
    ("cubic_line", &["x", "y"], &["x^3 - x^2", "y - x"]),
    ("grid", &["x", "y"], &["x^2 - x", "y^2 - y"]),
    ("fat_point_3d", &["x", "y", "z"], &["x^2", "y^2", "z^2"]),
];

pub fn system(name: &str) -> PolynomialSystem {
    let (_, vars, exprs) = SYSTEMS
        .iter()
        .find(|(n, _, _)| *n == name)
        .unwrap_or_else(|| panic!("unknown benchmark system {name}"));
    PolynomialSystem::parse(vars, exprs).expect("fixture parses")
}
