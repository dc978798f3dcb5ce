//! Canned surfaces and one-variable problems used by the examples, the CLI
//! and the verification suite.

use crate::analytic::{PhiFunction, PhiSpec};
use crate::classifier::{SurfaceKind, SurfaceSpec};

fn spec(name: &str, kind: SurfaceKind, gens: &[&str]) -> SurfaceSpec {
    SurfaceSpec::from_infix(kind, gens)
        .expect("catalog generators parse")
        .named(name)
}

/// `X1 = 0, X2 = 0`.
pub fn origin_fiber() -> SurfaceSpec {
    spec("origin_fiber", SurfaceKind::PointFiber, &["X1", "X2"])
}

/// `Xh1 = 1, Xh2 = 1`.
pub fn unit_torus_point() -> SurfaceSpec {
    spec("unit_torus_point", SurfaceKind::FullProjection, &["Xh1 - 1", "Xh2 - 1"])
}

/// `X1*X2 = 1, Xh1*Xh2 = 1`: a hyperbola, no rational-slope line.
pub fn hyperbola_pair() -> SurfaceSpec {
    spec("hyperbola_pair", SurfaceKind::CurvePair, &["X1*X2 - 1", "Xh1*Xh2 - 1"])
}

/// `X1 + X2 = 1, Xh1*Xh2 = 1`: no exponential points since `e != 1`.
pub fn sum_one_product_one() -> SurfaceSpec {
    spec("sum_one_product_one", SurfaceKind::CurvePair, &["X1 + X2 - 1", "Xh1*Xh2 - 1"])
}

/// `X1 + X2 = 1, Xh1*Xh2 = e`: every point of the line works.
pub fn sum_one_product_e() -> SurfaceSpec {
    spec("sum_one_product_e", SurfaceKind::CurvePair, &["X1 + X2 - 1", "Xh1*Xh2 - E"])
}

/// `X1 + X2 = 1, X1 + Xh1*Xh2 = e`: only `(0, 1, 1, e)`.
pub fn single_point_on_line() -> SurfaceSpec {
    spec(
        "single_point_on_line",
        SurfaceKind::CurvePair,
        &["X1 + X2 - 1", "X1 - E + Xh1*Xh2"],
    )
}

/// `X1 + X2 = 1, X1 - X1^2 + Xh1*Xh2 = e`: `(0, 1)` and `(1, 0)`.
pub fn two_points_on_line() -> SurfaceSpec {
    spec(
        "two_points_on_line",
        SurfaceKind::CurvePair,
        &["X1 + X2 - 1", "X1 - X1^2 - E + Xh1*Xh2"],
    )
}

/// `X1 + X2 = 1, X1*X2 = Xh1 + Xh2`.
pub fn line_product_sum() -> SurfaceSpec {
    spec(
        "line_product_sum",
        SurfaceKind::CurvePair,
        &["X1 + X2 - 1", "X1*X2 - Xh1 - Xh2"],
    )
}

/// `X1^9 + X2^9 = 1, Xh1 + Xh2 = 1`.
pub fn ninth_power_fermat() -> SurfaceSpec {
    spec(
        "ninth_power_fermat",
        SurfaceKind::CurvePair,
        &["X1^9 + X2^9 - 1", "Xh1 + Xh2 - 1"],
    )
}

/// Every canned surface.
pub fn surfaces() -> Vec<SurfaceSpec> {
    vec![
        origin_fiber(),
        unit_torus_point(),
        hyperbola_pair(),
        sum_one_product_one(),
        sum_one_product_e(),
        single_point_on_line(),
        two_points_on_line(),
        line_product_sum(),
        ninth_power_fermat(),
    ]
}

fn phi(spec: PhiSpec) -> PhiFunction {
    spec.build().expect("catalog function builds")
}

/// `e^z + e^{1/z} - 1`, from `X1*X2 = 1, Xh1 + Xh2 = 1` with `xi = (z, 1/z)`.
pub fn inverse_pair() -> PhiSpec {
    PhiSpec::new("inverse_pair", "Xh1 + Xh2 - 1", &[("z", "1"), ("1", "z")])
}

/// `e^z + e^{z^2} - 1`, from `X1^2 = X2, Xh1 + Xh2 = 1` with `xi = (z, z^2)`.
pub fn square_pair() -> PhiSpec {
    PhiSpec::new("square_pair", "Xh1 + Xh2 - 1", &[("z", "1"), ("z^2", "1")])
}

/// `e^z - z`.
pub fn exp_minus_z() -> PhiSpec {
    PhiSpec::new("exp_minus_z", "Xh1 - X1", &[("z", "1")])
}

/// The reduced equation `Yh^2 + e - Y Yh (1 - Y)` as a one-variable problem.
pub fn line_product_sum_reduced() -> PhiSpec {
    PhiSpec::new("line_product_sum_reduced", "Xh1^2 + E - X1*Xh1*(1 - X1)", &[("z", "1")])
}

/// `z^2 e^{1/z}`.
pub fn square_times_exp_inverse() -> PhiSpec {
    PhiSpec::new("square_times_exp_inverse", "X1^2*Xh2", &[("z", "1"), ("1", "z")])
}

/// `e^{z/2 + 1/4}`.
pub fn shifted_exponential() -> PhiSpec {
    PhiSpec::new("shifted_exponential", "Xh1", &[("2*z + 1", "4")])
}

pub fn inverse_pair_phi() -> PhiFunction {
    phi(inverse_pair())
}

pub fn square_pair_phi() -> PhiFunction {
    phi(square_pair())
}

pub fn exp_minus_z_phi() -> PhiFunction {
    phi(exp_minus_z())
}

pub fn line_product_sum_phi() -> PhiFunction {
    phi(line_product_sum_reduced())
}

pub fn square_times_exp_inverse_phi() -> PhiFunction {
    phi(square_times_exp_inverse())
}

pub fn shifted_exponential_phi() -> PhiFunction {
    phi(shifted_exponential())
}

/// Every canned one-variable problem.
pub fn functions() -> Vec<PhiSpec> {
    vec![
        inverse_pair(),
        square_pair(),
        exp_minus_z(),
        line_product_sum_reduced(),
        square_times_exp_inverse(),
        shifted_exponential(),
    ]
}
