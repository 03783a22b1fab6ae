//! Knot and link diagrams in the projection used for the linking number:
//! the first generic shear of the closed curves, with the under strand cut
//! at each crossing. Only the long strands are drawn; their closures never
//! cross anything but are part of the genericity test.

use glam::{DVec2, DVec3};

use scl_core::pl::{
    close_above, close_below, crossings, materialize_knot, materialize_link, self_crossings, shear, Crossing, Fat,
    CHORD_TOLERANCE, MAX_SHEAR_ATTEMPTS,
};
use scl_core::GeometryError;

use super::svg::{num, Svg};
use crate::error::CliError;

const WIDTH: f64 = 600.0;
const MARGIN: f64 = 30.0;
/// Half the length cut from an under strand, in diagram units.
const GAP: f64 = 0.05;

const STYLE: &str = ".strand{fill:none;stroke:#000;stroke-width:2;stroke-linejoin:round}\
.upper{stroke:#1f4e9c}.lower{stroke:#9c2f1f}\
.cylinder{fill:none;stroke:#999;stroke-width:1;stroke-dasharray:4 4}";

struct Component {
    /// Number of vertices of the long strand; later vertices close it up.
    open: usize,
    closed: Vec<DVec3>,
    class: &'static str,
}

fn components(x: &Fat) -> Result<Vec<Component>, GeometryError> {
    Ok(match x {
        Fat::Knot(k) => {
            let tube = materialize_knot(k, CHORD_TOLERANCE)?;
            vec![Component {
                open: tube.core().len(),
                closed: close_below(tube.core()),
                class: "strand",
            }]
        }
        Fat::Link(l) => {
            let [up, down] = materialize_link(l, CHORD_TOLERANCE)?;
            vec![
                Component {
                    open: up.core().len(),
                    closed: close_above(up.core()),
                    class: "strand upper",
                },
                Component {
                    open: down.core().len(),
                    closed: close_below(down.core()),
                    class: "strand lower",
                },
            ]
        }
    })
}

/// Under-crossing locations as (component, segment, point).
type Under = (usize, usize, DVec2);

fn diagram_crossings(comps: &[Component], s: (f64, f64)) -> Option<Vec<Under>> {
    let mut out = Vec::new();
    let mut push = |a: usize, b: usize, cs: Vec<Crossing>| {
        for c in cs {
            let under = if c.first_over { (b, c.segments.1) } else { (a, c.segments.0) };
            out.push((under.0, under.1, c.at));
        }
    };
    for (i, a) in comps.iter().enumerate() {
        push(i, i, self_crossings(&a.closed, s)?);
        for (j, b) in comps.iter().enumerate().skip(i + 1) {
            push(i, j, crossings(&a.closed, &b.closed, s)?);
        }
    }
    Some(out)
}

fn project(p: DVec3, s: (f64, f64)) -> DVec2 {
    DVec2::new(p.x - s.0 * p.y, p.z - s.1 * p.y)
}

/// The open polyline minus `GAP` on either side of each cut position.
fn pieces(points: &[DVec2], cuts: &[(usize, DVec2)]) -> Vec<Vec<DVec2>> {
    let mut cum = vec![0.0];
    for w in points.windows(2) {
        cum.push(cum.last().unwrap() + (w[1] - w[0]).length());
    }
    let total = *cum.last().unwrap();
    let mut holes: Vec<(f64, f64)> = cuts
        .iter()
        .filter(|(seg, _)| seg + 1 < points.len())
        .map(|&(seg, at)| {
            let s = cum[seg] + (at - points[seg]).length();
            (s - GAP, s + GAP)
        })
        .collect();
    holes.sort_by(|a, b| a.0.total_cmp(&b.0));
    let point_at = |s: f64| {
        let j = cum.partition_point(|&c| c <= s).clamp(1, points.len() - 1) - 1;
        let len = cum[j + 1] - cum[j];
        let f = if len > 0.0 { (s - cum[j]) / len } else { 0.0 };
        points[j].lerp(points[j + 1], f)
    };
    let mut out = Vec::new();
    let mut start = 0.0;
    for (lo, hi) in holes.into_iter().chain([(total, total)]) {
        let end = lo.min(total);
        if end > start {
            let mut piece = vec![point_at(start)];
            piece.extend(points.iter().zip(&cum).filter(|(_, &c)| c > start && c < end).map(|(p, _)| *p));
            piece.push(point_at(end));
            out.push(piece);
        }
        start = start.max(hi);
    }
    out
}

pub fn render(x: &Fat) -> Result<String, CliError> {
    let comps = components(x)?;
    let (k, unders) = (0..MAX_SHEAR_ATTEMPTS)
        .find_map(|k| diagram_crossings(&comps, shear(k)).map(|u| (k, u)))
        .ok_or(GeometryError::NoGenericProjection {
            attempts: MAX_SHEAR_ATTEMPTS,
        })?;
    let s = shear(k);
    let open: Vec<Vec<DVec2>> = comps
        .iter()
        .map(|c| c.closed[..c.open].iter().map(|&p| project(p, s)).collect())
        .collect();
    let cylinder = [DVec2::new(-1.0, -1.0), DVec2::new(1.0, 1.0)];
    let (lo, hi) = open
        .iter()
        .flatten()
        .chain(&cylinder)
        .fold((DVec2::INFINITY, DVec2::NEG_INFINITY), |(lo, hi), p| (lo.min(*p), hi.max(*p)));
    let scale = (WIDTH - 2.0 * MARGIN) / (hi.x - lo.x);
    let height = (hi.y - lo.y) * scale + 2.0 * MARGIN;
    let to_svg = |p: DVec2| (MARGIN + (p.x - lo.x) * scale, height - MARGIN - (p.y - lo.y) * scale);
    let mut svg = Svg::new(WIDTH, height);
    let (c0, c1) = (to_svg(cylinder[0]), to_svg(cylinder[1]));
    svg.line(format!(
        r#"<rect id="cylinder" class="cylinder" x="{}" y="{}" width="{}" height="{}"/>"#,
        num(c0.0),
        num(c1.1),
        num(c1.0 - c0.0),
        num(c0.1 - c1.1)
    ));
    for (i, (comp, points)) in comps.iter().zip(&open).enumerate() {
        let cuts: Vec<(usize, DVec2)> = unders.iter().filter(|u| u.0 == i).map(|u| (u.1, u.2)).collect();
        for (n, piece) in pieces(points, &cuts).iter().enumerate() {
            let pts: Vec<(f64, f64)> = piece.iter().map(|&p| to_svg(p)).collect();
            svg.polyline(&format!("strand-{}-{}", i + 1, n + 1), comp.class, &pts);
        }
    }
    let desc = format!("shear {} {}; crossings {}", num(s.0), num(s.1), unders.len());
    Ok(svg.finish(STYLE, &desc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use scl_core::pl::{standard_link, twist};

    #[test]
    fn standard_link_is_two_segments() {
        let svg = render(&Fat::Link(standard_link())).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("crossings 0"));
    }

    #[test]
    fn cuts_split_a_segment() {
        let pts = vec![DVec2::new(-1.0, 0.0), DVec2::new(1.0, 0.0)];
        let p = pieces(&pts, &[(0, DVec2::ZERO)]);
        assert_eq!(p.len(), 2);
        assert!((p[0][1].x + GAP).abs() < 1e-12 && (p[1][0].x - GAP).abs() < 1e-12);
        assert_eq!(pieces(&pts, &[]).len(), 1);
    }

    #[test]
    fn twist_core_is_straight() {
        let svg = render(&Fat::Knot(twist(2))).unwrap();
        assert!(svg.contains("crossings 0"));
    }
}
