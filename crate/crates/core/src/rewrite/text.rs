//! Plain-text presentation format.
//!
//! ```text
//! # quantum plane
//! field 7
//! generators x y
//! weights 1 1
//! bound 12
//! y*x -> 2 x*y
//! x*x*x -> 0
//! ```
//!
//! `weights` is optional (defaults to all ones). A term is an optional integer
//! coefficient followed by a word; words join generator names with `*`, and
//! `1` is the empty word. Terms are separated by ` + `; a right side of `0` is
//! the zero polynomial. Everything after `#` is ignored.

use super::{Poly, Presentation, RewriteError, Rule};
use crate::linalg::Field;

impl Presentation {
    pub fn parse(text: &str) -> Result<Self, RewriteError> {
        let err = |line: usize, msg: String| RewriteError::Parse { line, msg };
        let mut field = None;
        let mut generators: Option<Vec<String>> = None;
        let mut weights = None;
        let mut bound = None;
        let mut raw_rules: Vec<(usize, String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some((lhs, rhs)) = line.split_once("->") {
                raw_rules.push((lineno, lhs.trim().to_string(), rhs.trim().to_string()));
                continue;
            }
            let mut parts = line.split_whitespace();
            let key = parts.next().unwrap();
            let rest: Vec<&str> = parts.collect();
            match key {
                "field" => {
                    let p: u64 = rest
                        .first()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err(lineno, "expected `field <prime>`".into()))?;
                    field = Some(Field::new(p).map_err(|e| err(lineno, e.to_string()))?);
                }
                "generators" => generators = Some(rest.iter().map(|s| s.to_string()).collect()),
                "weights" => {
                    let w = rest
                        .iter()
                        .map(|s| s.parse::<u32>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| err(lineno, format!("bad weight: {e}")))?;
                    weights = Some(w);
                }
                "bound" => {
                    bound = Some(
                        rest.first()
                            .and_then(|s| s.parse::<usize>().ok())
                            .ok_or_else(|| err(lineno, "expected `bound <n>`".into()))?,
                    );
                }
                other => return Err(err(lineno, format!("unknown directive {other:?}"))),
            }
        }
        let field = field.ok_or_else(|| err(0, "missing `field`".into()))?;
        let generators = generators.ok_or_else(|| err(0, "missing `generators`".into()))?;
        let bound = bound.ok_or_else(|| err(0, "missing `bound`".into()))?;
        // a bare presentation is enough to parse words
        let scratch = Presentation::new(field, generators.clone(), weights.clone(), vec![], bound)?;
        let mut rules = Vec::new();
        for (lineno, lhs, rhs) in raw_rules {
            let lhs = scratch.word(&lhs).map_err(|e| err(lineno, e.to_string()))?;
            let rhs = scratch.parse_poly(&rhs).map_err(|e| err(lineno, e.to_string()))?;
            rules.push(Rule { lhs, rhs });
        }
        Presentation::new(field, generators, weights, rules, bound)
    }

    /// Parses `c1 w1 + c2 w2 + ...`, reducing signed coefficients mod p.
    pub fn parse_poly(&self, s: &str) -> Result<Poly, RewriteError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Vec::new());
        }
        s.split(" + ")
            .map(|term| {
                let term = term.trim();
                match term.split_once(' ') {
                    Some((c, w)) => {
                        let c: i64 = c
                            .parse()
                            .map_err(|_| RewriteError::Invalid(format!("bad coefficient in {term:?}")))?;
                        Ok((self.word(w)?, self.field.from_i64(c)))
                    }
                    None => Ok((self.word(term)?, 1)),
                }
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("field {}\ngenerators {}\n", self.field.p(), self.generators.join(" "));
        if self.weights.iter().any(|&w| w != 1) {
            let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
            out.push_str(&format!("weights {}\n", ws.join(" ")));
        }
        out.push_str(&format!("bound {}\n", self.word_bound));
        for r in &self.rules {
            let rhs = if r.rhs.is_empty() {
                "0".to_string()
            } else {
                r.rhs
                    .iter()
                    .map(|(w, c)| if *c == 1 { self.format_word(w) } else { format!("{c} {}", self.format_word(w)) })
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            out.push_str(&format!("{} -> {rhs}\n", self.format_word(&r.lhs)));
        }
        out
    }
}
