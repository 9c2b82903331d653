//! Finitely presented link groups together with their abelianization
//! onto `Z × Z = <x> × <y>`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly2;
use crate::text;

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

pub type Word = Vec<Letter>;

/// `⟨generators | relators⟩` with `abmap[i] = (a, b)` meaning generator i
/// abelianizes to `x^a y^b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    abmap: Vec<(i64, i64)>,
}

/// Image of a word in `Z × Z`.
pub fn abelianize(word: &[Letter], abmap: &[(i64, i64)]) -> Result<(i64, i64)> {
    let mut e = (0, 0);
    for l in word {
        let (a, b) = *abmap.get(l.gen).ok_or(Error::UnknownGenerator(l.gen))?;
        if l.inverse {
            e = (e.0 - a, e.1 - b);
        } else {
            e = (e.0 + a, e.1 + b);
        }
    }
    Ok(e)
}

impl GroupPresentation {
    /// Validates generator indices, that every relator abelianizes to the
    /// identity, and that both meridians `x^±1` and `y^±1` occur.
    pub fn new(
        generators: Vec<String>,
        relators: Vec<Word>,
        abmap: Vec<(i64, i64)>,
    ) -> Result<Self> {
        if abmap.len() != generators.len() {
            return Err(Error::Parse(format!(
                "{} generators but {} abelianization entries",
                generators.len(),
                abmap.len()
            )));
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(l) = r.iter().find(|l| l.gen >= generators.len()) {
                return Err(Error::UnknownGenerator(l.gen));
            }
            if abelianize(r, &abmap)? != (0, 0) {
                return Err(Error::InconsistentAbelianization(i));
            }
        }
        let has_x = abmap.iter().any(|&(a, b)| a.abs() == 1 && b == 0);
        let has_y = abmap.iter().any(|&(a, b)| a == 0 && b.abs() == 1);
        if !(has_x && has_y) {
            return Err(Error::MissingMeridian);
        }
        Ok(GroupPresentation {
            generators,
            relators,
            abmap,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn abmap(&self) -> &[(i64, i64)] {
        &self.abmap
    }

    /// Parses the line format
    ///
    /// ```text
    /// gens: a b c
    /// ab: a=x b=y c=x
    /// rel: a b a^-1 b^-1
    /// ```
    ///
    /// with one `rel:` line per relator; blank lines and `#` comments are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens: Option<Vec<String>> = None;
        let mut ab_lines: Vec<String> = Vec::new();
        let mut rel_lines: Vec<String> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("line {}: expected 'key: value'", n + 1)))?;
            match key.trim() {
                "gens" => {
                    if gens.is_some() {
                        return Err(Error::Parse(format!("line {}: duplicate gens", n + 1)));
                    }
                    gens = Some(rest.split_whitespace().map(str::to_string).collect());
                }
                "ab" => ab_lines.push(rest.to_string()),
                "rel" => rel_lines.push(rest.to_string()),
                other => {
                    return Err(Error::Parse(format!(
                        "line {}: unknown key '{other}'",
                        n + 1
                    )))
                }
            }
        }
        let gens = gens.ok_or_else(|| Error::Parse("missing 'gens:' line".into()))?;
        let index = |name: &str| -> Result<usize> {
            gens.iter()
                .position(|g| g == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator '{name}'")))
        };

        let mut abmap: Vec<Option<(i64, i64)>> = vec![None; gens.len()];
        for item in ab_lines.iter().flat_map(|l| l.split_whitespace()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad abelianization entry '{item}'")))?;
            let poly = text::parse_poly2(value, ['x', 'y'])?;
            let mut terms = poly.terms();
            let exps = match (terms.next(), terms.next()) {
                (Some((k, c)), None) if *c == 1.into() => k,
                _ => return Err(Error::Parse(format!("'{value}' is not a monomial x^a*y^b"))),
            };
            abmap[index(name)?] = Some(exps);
        }
        let abmap = abmap
            .into_iter()
            .zip(&gens)
            .map(|(a, g)| {
                a.ok_or_else(|| Error::Parse(format!("generator '{g}' has no abelianization")))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut relators = Vec::new();
        for line in &rel_lines {
            let mut word = Vec::new();
            for tok in line.split_whitespace() {
                let (name, exp) = match tok.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.trim_matches(|c| c == '(' || c == ')')
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad exponent in '{tok}'")))?,
                    ),
                    None => (tok, 1),
                };
                let gen = index(name)?;
                let letter = Letter::new(gen, exp < 0);
                word.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
            }
            relators.push(word);
        }
        Self::new(gens, relators, abmap)
    }

    /// Serializes in the format accepted by [`GroupPresentation::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "gens: {}", self.generators.join(" ")).unwrap();
        let ab: Vec<String> = self
            .generators
            .iter()
            .zip(&self.abmap)
            .map(|(g, &(a, b))| format!("{g}={}", LaurentPoly2::monomial(a, b, 1)))
            .collect();
        writeln!(out, "ab: {}", ab.join(" ")).unwrap();
        for r in &self.relators {
            let letters: Vec<String> = r
                .iter()
                .map(|l| {
                    let g = &self.generators[l.gen];
                    if l.inverse {
                        format!("{g}^-1")
                    } else {
                        g.clone()
                    }
                })
                .collect();
            writeln!(out, "rel: {}", letters.join(" ")).unwrap();
        }
        out
    }
}
