//! Linking numbers from the Gauss integral, summed exactly over pairs of
//! straight segments as signed solid angles. Independent of any projection.

use glam::DVec3;

fn solid_angle(p1: DVec3, p2: DVec3, p3: DVec3, p4: DVec3) -> f64 {
    let r13 = p3 - p1;
    let r14 = p4 - p1;
    let r23 = p3 - p2;
    let r24 = p4 - p2;
    let n = [r13.cross(r14), r14.cross(r24), r24.cross(r23), r23.cross(r13)];
    if n.iter().any(|v| v.length() < 1e-300) {
        return 0.0;
    }
    let n = n.map(DVec3::normalize);
    let omega: f64 = (0..4).map(|i| n[i].dot(n[(i + 1) % 4]).clamp(-1.0, 1.0).asin()).sum();
    let sign = (p4 - p3).cross(p2 - p1).dot(r13).signum();
    omega * sign
}

/// `(1/4π) ∮∮ ...` for two closed polylines.
pub fn gauss_linking(a: &[DVec3], b: &[DVec3]) -> f64 {
    let mut total = 0.0;
    for i in 0..a.len() {
        let (p1, p2) = (a[i], a[(i + 1) % a.len()]);
        for j in 0..b.len() {
            let (p3, p4) = (b[j], b[(j + 1) % b.len()]);
            total += solid_angle(p1, p2, p3, p4);
        }
    }
    total / (4.0 * std::f64::consts::PI)
}

/// The nearest integer, if the integral is within `0.05` of it.
pub fn gauss_integer(a: &[DVec3], b: &[DVec3]) -> Option<i64> {
    let v = gauss_linking(a, b);
    let r = v.round();
    ((v - r).abs() < 0.05).then_some(r as i64)
}
