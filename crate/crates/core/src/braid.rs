//! Braid words, their closures, and Wirtinger presentations of the
//! closure's link group.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::presentation::{GroupPresentation, Letter};

/// A word in the standard generators `σ_1 .. σ_{n-1}`; letter `k` stands
/// for `σ_k` and `-k` for its inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Parse("a braid needs at least two strands".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses `n; k1 k2 ...`, e.g. `3; 1 -2 1 -2 1`. A letter may carry a
    /// repeat count, `1^4` meaning `1 1 1 1`.
    pub fn parse(text: &str) -> Result<Self> {
        let (n, word) = text
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected 'strands; letters' in '{text}'")))?;
        let strands: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count '{}'", n.trim())))?;
        let mut letters = Vec::new();
        for tok in word
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
        {
            let (l, rep) = match tok.split_once('^') {
                Some((l, r)) => (
                    l,
                    r.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad repeat in '{tok}'")))?,
                ),
                None => (tok, 1),
            };
            let l: i64 = l
                .parse()
                .map_err(|_| Error::Parse(format!("bad braid letter '{tok}'")))?;
            letters.extend(std::iter::repeat_n(l, rep));
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Component structure of a braid closure.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkInfo {
    pub components: usize,
    /// Component of the strand starting at each top position. Components
    /// are numbered by their smallest top position.
    pub strand_component: Vec<usize>,
    /// Half the signed count of crossings between components 0 and 1
    /// (zero unless there are exactly two components).
    pub linking_number: i64,
}

/// Walks the permutation of the braid to find the closure's components
/// and the linking number, with `σ_k` counted as a positive crossing.
pub fn analyze_closure(braid: &BraidWord) -> LinkInfo {
    let n = braid.strands;
    // owner[pos] = top position of the strand currently at pos
    let mut owner: Vec<usize> = (0..n).collect();
    let mut crossings: Vec<(usize, usize, i64)> = Vec::with_capacity(braid.letters.len());
    for &l in &braid.letters {
        let k = l.unsigned_abs() as usize;
        crossings.push((owner[k - 1], owner[k], l.signum()));
        owner.swap(k - 1, k);
    }
    // the strand ending at bottom position q continues as top strand q
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut s = start;
        while comp[s] == usize::MAX {
            comp[s] = count;
            let q = owner.iter().position(|&o| o == s).expect("permutation");
            s = q;
        }
        count += 1;
    }
    let linking_number = if count == 2 {
        let twice: i64 = crossings
            .iter()
            .filter(|(a, b, _)| comp[*a] != comp[*b])
            .map(|c| c.2)
            .sum();
        twice / 2
    } else {
        0
    };
    LinkInfo {
        components: count,
        strand_component: comp,
        linking_number,
    }
}

fn find(parent: &mut [usize], mut a: usize) -> usize {
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

/// Wirtinger presentation of the closure of a braid whose closure has two
/// components. Arcs of component 0 map to `x`, those of component 1 to
/// `y`. One relator per crossing; when a component passes under nothing
/// its lone arc gets an empty relator, so the presentation stays square.
pub fn braid_to_presentation(braid: &BraidWord) -> Result<GroupPresentation> {
    let info = analyze_closure(braid);
    if info.components != 2 {
        return Err(Error::ComponentCount(info.components));
    }
    let n = braid.strands;
    // (current arc, top strand) at each position
    let mut at: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    let mut arc_comp: Vec<usize> = info.strand_component.clone();
    let mut raw: Vec<[Letter; 4]> = Vec::new();
    for &l in &braid.letters {
        let k = l.unsigned_abs() as usize;
        let (left, right) = (k - 1, k);
        let new_arc = arc_comp.len();
        if l > 0 {
            // left strand passes over to the right
            let (o, os) = at[left];
            let (u, us) = at[right];
            arc_comp.push(info.strand_component[us]);
            raw.push([
                Letter::new(o, false),
                Letter::new(u, false),
                Letter::new(o, true),
                Letter::new(new_arc, true),
            ]);
            at[right] = (o, os);
            at[left] = (new_arc, us);
        } else {
            // right strand passes over to the left
            let (o, os) = at[right];
            let (u, us) = at[left];
            arc_comp.push(info.strand_component[us]);
            raw.push([
                Letter::new(o, true),
                Letter::new(u, false),
                Letter::new(o, false),
                Letter::new(new_arc, true),
            ]);
            at[left] = (o, os);
            at[right] = (new_arc, us);
        }
    }
    let mut parent: Vec<usize> = (0..arc_comp.len()).collect();
    for (q, &(arc, _)) in at.iter().enumerate() {
        let (a, b) = (find(&mut parent, arc), find(&mut parent, q));
        let (lo, hi) = (a.min(b), a.max(b));
        parent[hi] = lo;
    }
    // generators = classes, ordered by their smallest arc
    let mut class_of = vec![usize::MAX; arc_comp.len()];
    let mut gens = Vec::new();
    let mut abmap = Vec::new();
    for a in 0..arc_comp.len() {
        let root = find(&mut parent, a);
        if class_of[root] == usize::MAX {
            class_of[root] = gens.len();
            gens.push(format!("a{}", gens.len() + 1));
            abmap.push(if arc_comp[a] == 0 { (1, 0) } else { (0, 1) });
        }
        class_of[a] = class_of[root];
    }
    let mut relators: Vec<Vec<Letter>> = raw
        .iter()
        .map(|r| {
            r.iter()
                .map(|l| Letter::new(class_of[l.gen], l.inverse))
                .collect()
        })
        .collect();
    while relators.len() < gens.len() {
        relators.push(Vec::new());
    }
    GroupPresentation::new(gens, relators, abmap)
}
