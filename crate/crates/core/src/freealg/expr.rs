use super::poly::{Gen, NcPoly, Word};
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("bad coefficient `{0}`")]
    BadCoefficient(String),
    #[error("unbalanced parentheses in `{0}`")]
    Unbalanced(String),
    #[error("empty expression")]
    Empty,
}

/// Generator names per slot. Generator `id` of slot `s` prints as
/// `names[s][id]`, with suffix `_{s+1}` for `s > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    slots: Vec<Vec<String>>,
}

impl Alphabet {
    pub fn new(slots: Vec<Vec<String>>) -> Self {
        Alphabet { slots }
    }

    pub fn single(names: &[&str]) -> Self {
        Alphabet { slots: vec![names.iter().map(|s| s.to_string()).collect()] }
    }

    pub fn slots(&self) -> usize {
        self.slots.len()
    }

    pub fn names(&self, slot: usize) -> &[String] {
        &self.slots[slot]
    }

    /// All generators, slot by slot.
    pub fn gens(&self) -> Vec<Gen> {
        self.slots
            .iter()
            .enumerate()
            .flat_map(|(s, names)| (0..names.len()).map(move |i| Gen::new(s as u8, i as u8)))
            .collect()
    }

    pub fn gen_name(&self, g: Gen) -> String {
        let base = self.slots.get(g.slot as usize).and_then(|n| n.get(g.id as usize)).cloned().unwrap_or_else(|| format!("g{}", g.id));
        if g.slot == 0 {
            base
        } else {
            format!("{}_{}", base, g.slot + 1)
        }
    }

    pub fn lookup(&self, name: &str) -> Option<Gen> {
        let (base, slot) = match name.rsplit_once('_') {
            Some((b, s)) if !b.is_empty() && s.chars().all(|c| c.is_ascii_digit()) && !s.is_empty() => {
                let k: usize = s.parse().ok()?;
                if k < 2 {
                    return None;
                }
                (b, k - 1)
            }
            _ => (name, 0),
        };
        let id = self.slots.get(slot)?.iter().position(|n| n == base)?;
        Some(Gen::new(slot as u8, id as u8))
    }

    pub fn format_word(&self, w: &[Gen]) -> String {
        w.iter().map(|g| self.gen_name(*g)).collect::<Vec<_>>().join("*")
    }

    /// Terms in (length, word) order; unit coefficients omitted.
    pub fn format(&self, p: &NcPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = p
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    if c.is_one() {
                        "1".into()
                    } else {
                        format!("({})", c)
                    }
                } else if c.is_one() {
                    self.format_word(w)
                } else {
                    format!("({})*{}", c, self.format_word(w))
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Parses sums of products of generator names and parenthesised or bare
    /// scalars, e.g. `t11*t22 + (-1*v^-2)*t12*t21 + -1`.
    pub fn parse(&self, s: &str) -> Result<NcPoly, ExprError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ExprError::Empty);
        }
        let mut out = NcPoly::zero();
        for term in split_top(s, '+', s)? {
            out = &out + &self.parse_term(term.trim(), s)?;
        }
        Ok(out)
    }

    fn parse_term(&self, t: &str, whole: &str) -> Result<NcPoly, ExprError> {
        if t.is_empty() {
            return Err(ExprError::Empty);
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) if !rest.trim_start().starts_with(|c: char| c.is_ascii_digit()) => (true, rest.trim()),
            _ => (false, t),
        };
        let mut coef = if neg { -Scalar::one() } else { Scalar::one() };
        let mut w = Word::new();
        for f in split_top(body, '*', whole)? {
            let f = f.trim();
            if let Some(g) = self.lookup(f) {
                w.push(g);
                continue;
            }
            let c: Scalar = strip_parens(f).parse().map_err(|_| ExprError::BadCoefficient(f.to_string()))?;
            if !w.is_empty() && !f.starts_with('(') {
                return Err(ExprError::UnknownGenerator(f.to_string()));
            }
            coef = &coef * &c;
        }
        Ok(NcPoly::term(coef, w))
    }
}

fn strip_parens(f: &str) -> &str {
    if f.starts_with('(') && f.ends_with(')') && matching_close(f) == Some(f.len() - 1) {
        &f[1..f.len() - 1]
    } else {
        f
    }
}

fn matching_close(f: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in f.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Splits on `sep` outside parentheses. A `+` directly after `^` is not a separator.
fn split_top<'a>(s: &'a str, sep: char, whole: &str) -> Result<Vec<&'a str>, ExprError> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut prev = ' ';
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ExprError::Unbalanced(whole.to_string()));
                }
            }
            c if c == sep && depth == 0 && prev != '^' => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if !ch.is_whitespace() {
            prev = ch;
        }
    }
    if depth != 0 {
        return Err(ExprError::Unbalanced(whole.to_string()));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(vec![vec!["a".into(), "b".into()], vec!["a".into(), "b".into()]])
    }

    #[test]
    fn names_and_suffixes() {
        let al = ab();
        assert_eq!(al.lookup("b_2"), Some(Gen::new(1, 1)));
        assert_eq!(al.lookup("a"), Some(Gen::new(0, 0)));
        assert_eq!(al.lookup("a_1"), None);
        assert_eq!(al.gen_name(Gen::new(1, 0)), "a_2");
    }

    #[test]
    fn round_trip() {
        let al = ab();
        for s in ["1 + a*b_2", "(v^2)*a*b", "(-1)", "0", "a + ((v^2)/(v^4 + -1))*b*a"] {
            let p = al.parse(s).unwrap();
            let back = al.parse(&al.format(&p)).unwrap();
            assert_eq!(p, back, "{}", s);
        }
        assert_eq!(al.format(&al.parse("b + a + a*a + 1").unwrap()), "1 + a + b + a*a");
        assert_eq!(al.format(&al.parse("-a + a").unwrap()), "0");
        assert!(al.parse("a*c").is_err());
        assert!(al.parse("(a").is_err());
    }
}
