use std::fmt::Write;

/// Fixed three-decimal coordinates without negative zero.
pub fn num(x: f64) -> String {
    let r = (x * 1000.0).round() / 1000.0 + 0.0;
    format!("{r:.3}")
}

pub fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub struct Svg {
    body: String,
    width: f64,
    height: f64,
}

impl Svg {
    pub fn new(width: f64, height: f64) -> Self {
        Svg {
            body: String::new(),
            width,
            height,
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.body.push_str("  ");
        self.body.push_str(s.as_ref());
        self.body.push('\n');
    }

    pub fn polyline(&mut self, id: &str, class: &str, points: &[(f64, f64)]) {
        let mut pts = String::new();
        for (n, (x, y)) in points.iter().enumerate() {
            if n > 0 {
                pts.push(' ');
            }
            let _ = write!(pts, "{},{}", num(*x), num(*y));
        }
        self.line(format!(r#"<polyline id="{id}" class="{class}" points="{pts}"/>"#));
    }

    pub fn finish(self, style: &str, desc: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = num(self.width),
            h = num(self.height)
        );
        let _ = writeln!(out, "  <desc>{}</desc>", escape(desc));
        let _ = writeln!(out, "  <style>{style}</style>");
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_are_stable() {
        assert_eq!(num(-0.0), "0.000");
        assert_eq!(num(-0.0001), "0.000");
        assert_eq!(num(1.23456), "1.235");
        assert_eq!(escape("a<b&c"), "a&lt;b&amp;c");
    }
}
