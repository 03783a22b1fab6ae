//! Boxes numbered `i` with their color as a superscript; the output color
//! is the subscript of the frame.

use scl_core::cubes::CubeConfig;

use super::svg::{escape, num, Svg};
use crate::input::CubeDocument;

const SIDE: f64 = 400.0;
const MARGIN: f64 = 40.0;
const STRIP: f64 = 120.0;

const STYLE: &str = ".frame{fill:none;stroke:#000;stroke-width:2}\
.cube{stroke:#000;stroke-width:1}\
.o{fill:#eeeeee}.up{fill:#d6e6f5}.down{fill:#f5dcd6}.updown{fill:#dcefd6}.plain{fill:#f4f4f4}\
text{font-family:serif;font-size:16px;text-anchor:middle}";

fn bounds(c: &CubeConfig, i: usize, axis: usize) -> (f64, f64) {
    let (scale, offset) = c.cube(i).factor(axis).to_f64();
    (offset - scale, offset + scale)
}

pub fn render(doc: &CubeDocument) -> String {
    let (config, colors, output) = match doc {
        CubeDocument::Config(c) => (c, None, None),
        CubeDocument::Scl(e) => (e.config(), Some(e.input_colors()), Some(e.output_color())),
    };
    let height = if config.dim() == 1 { STRIP } else { SIDE };
    let to_x = |x: f64| MARGIN + (x + 1.0) * SIDE / 2.0;
    let to_y = |y: f64| MARGIN + (1.0 - y) * height / 2.0;
    let mut svg = Svg::new(SIDE + 2.0 * MARGIN, height + 2.0 * MARGIN);
    if let Some(s) = output {
        svg.line(format!(
            r#"<text id="frame-color" x="{}" y="{}">J<tspan baseline-shift="sub" font-size="11px">{}</tspan></text>"#,
            num(MARGIN + SIDE + 14.0),
            num(MARGIN + height + 16.0),
            escape(s.symbol())
        ));
    }
    for i in 0..config.arity() {
        let (x0, x1) = bounds(config, i, 0);
        let (y0, y1) = if config.dim() == 1 { (-1.0, 1.0) } else { bounds(config, i, 1) };
        let class = colors.map_or("plain", |c| c[i].as_str());
        svg.line(format!(
            r#"<rect id="cube-{n}" class="cube {class}" x="{}" y="{}" width="{}" height="{}"/>"#,
            num(to_x(x0)),
            num(to_y(y1)),
            num(to_x(x1) - to_x(x0)),
            num(to_y(y0) - to_y(y1)),
            n = i + 1
        ));
        let label = match colors {
            Some(c) => format!(
                r#"{}<tspan baseline-shift="super" font-size="11px">{}</tspan>"#,
                i + 1,
                escape(c[i].symbol())
            ),
            None => (i + 1).to_string(),
        };
        svg.line(format!(
            r#"<text id="label-{n}" x="{}" y="{}">{label}</text>"#,
            num((to_x(x0) + to_x(x1)) / 2.0),
            num((to_y(y0) + to_y(y1)) / 2.0 + 5.0),
            n = i + 1
        ));
    }
    svg.line(format!(
        r#"<rect id="frame" class="frame" x="{}" y="{}" width="{}" height="{}"/>"#,
        num(MARGIN),
        num(MARGIN),
        num(SIDE),
        num(height)
    ));
    let desc = match output {
        Some(s) => format!("SCL operation of arity {} with output color {}", config.arity(), s),
        None => format!("{}-dimensional configuration of arity {}", config.dim(), config.arity()),
    };
    svg.finish(STYLE, &desc)
}
