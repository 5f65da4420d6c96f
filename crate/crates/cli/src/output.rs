use std::fmt::Write;

use geoshapley::{Algorithm, GameKind, Point, Shapley};

/// 17 significant digits, enough to read every double back exactly.
pub fn num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".into()
    }
}

pub struct Record<'a> {
    pub game: GameKind,
    pub algorithm: Algorithm,
    pub points: &'a [Point],
    pub result: &'a Shapley,
    pub wall_time_ms: Option<f64>,
}

impl Record<'_> {
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        s.push_str("{\n");
        let _ = writeln!(s, "  \"game\": \"{}\",", self.game);
        let _ = writeln!(s, "  \"n\": {},", self.points.len());
        let _ = writeln!(s, "  \"algorithm\": \"{}\",", self.algorithm);
        s.push_str("  \"values\": [\n");
        for (i, (p, v)) in self.points.iter().zip(&self.result.values).enumerate() {
            let sep = if i + 1 < self.points.len() { "," } else { "" };
            let _ = writeln!(
                s,
                "    {{\"index\": {i}, \"point\": [{}, {}], \"shapley\": {}}}{sep}",
                num(p.x),
                num(p.y),
                num(*v)
            );
        }
        s.push_str("  ],\n");
        let _ = writeln!(s, "  \"total\": {},", num(self.result.game_total));
        let _ = writeln!(s, "  \"efficiency_residual\": {},", num(self.result.efficiency_residual()));
        let t = self.wall_time_ms.map_or("null".to_string(), num);
        let _ = writeln!(s, "  \"wall_time_ms\": {t}");
        s.push_str("}\n");
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("index,x,y,shapley\n");
        for (i, (p, v)) in self.points.iter().zip(&self.result.values).enumerate() {
            let _ = writeln!(s, "{i},{},{},{}", num(p.x), num(p.y), num(*v));
        }
        let _ = writeln!(s, "# game={} algorithm={} n={}", self.game, self.algorithm, self.points.len());
        let _ = writeln!(s, "# total={}", num(self.result.game_total));
        let _ = writeln!(s, "# efficiency_residual={}", num(self.result.efficiency_residual()));
        if let Some(t) = self.wall_time_ms {
            let _ = writeln!(s, "# wall_time_ms={}", num(t));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_digits() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 123456789.12345679, f64::MIN_POSITIVE] {
            assert_eq!(num(v).parse::<f64>().unwrap(), v);
        }
    }
}
