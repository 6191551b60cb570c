use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::difference::build_difference_set;
use super::plane::{build_full_plane, circles_through_zero};
use super::require_quartic;
use crate::gf::FieldTower;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub pass: bool,
    pub checked: u64,
    /// Points (or exponents) violating the statement.
    pub counterexample: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub q: u32,
    pub lemmas: Vec<LemmaResult>,
}

impl LemmaReport {
    pub fn pass(&self) -> bool {
        self.lemmas.iter().all(|l| l.pass)
    }

    pub fn get(&self, name: &str) -> Option<&LemmaResult> {
        self.lemmas.iter().find(|l| l.name == name)
    }
}

struct Tally {
    checked: u64,
    counterexample: Option<Vec<u64>>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            counterexample: None,
        }
    }

    fn check(&mut self, ok: bool, example: impl FnOnce() -> Vec<u64>) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(example());
        }
    }

    fn finish(self, name: &'static str, statement: &'static str) -> LemmaResult {
        LemmaResult {
            name,
            statement,
            pass: self.counterexample.is_none(),
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

/// Exhaustive checks of the circle lemmas over `C_x` and the full plane.
/// Points live in `Z_{q^2+1}`, `s = (q^2+1)/2`.
pub fn run_lemma_suite(tower: &FieldTower) -> Result<LemmaReport> {
    require_quartic(tower)?;
    let q = tower.q();
    if q.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic(q));
    }
    let q64 = q as u64;
    let n = q64 * q64 + 1;
    let s = n / 2;
    let neg = |i: u64| (n - i) % n;
    let d = build_difference_set(tower)?;
    let through_zero = circles_through_zero(&d);
    let sets: Vec<(u64, BTreeSet<u64>)> = through_zero
        .iter()
        .map(|(x, c)| (*x, c.iter().map(|&i| i as u64).collect()))
        .collect();
    let mut lemmas = Vec::new();

    let mut t = Tally::new();
    let zeros: Vec<u64> = (0..n)
        .filter(|&x| tower.trace(tower.alpha_pow((q64 + 1) * x)) == 0)
        .collect();
    t.check(zeros == [s], || zeros.clone());
    lemmas.push(t.finish("trace-zero", "Tr(alpha^((q+1)x)) = 0 only at x = s"));

    let mut t = Tally::new();
    let x0 = s * (q64 + 1);
    let mut distinct = BTreeSet::new();
    for (x, c) in &sets {
        if *x == x0 {
            t.check(c.len() == 1 && c.contains(&0), || vec![*x]);
        } else {
            t.check(c.len() as u64 == q64 + 1 && c.contains(&0), || vec![*x]);
            distinct.insert(c.clone());
        }
    }
    t.check(distinct.len() as u64 == q64 * (q64 + 1), || {
        vec![distinct.len() as u64]
    });
    lemmas.push(t.finish(
        "circles-through-zero",
        "C_x0 = {0}; the other C_x are q(q+1) distinct circles of size q+1",
    ));

    let mut t = Tally::new();
    for (x, c) in &sets {
        for &i in c.iter().filter(|&&i| i != 0 && i != s) {
            if !c.contains(&neg(i)) {
                continue;
            }
            for &j in c.iter().filter(|&&j| j != 0 && j != s) {
                t.check(c.contains(&neg(j)), || vec![*x, i, j]);
            }
        }
    }
    lemmas.push(t.finish(
        "negation-closure",
        "0, i, -i, j in C_x with i, j not in {0, s} gives -j in C_x",
    ));

    let mut t = Tally::new();
    for (x, c) in sets.iter().filter(|(_, c)| c.contains(&s)) {
        for &i in c {
            t.check(c.contains(&neg(i)), || vec![*x, i]);
        }
    }
    lemmas.push(t.finish("antipodal-symmetric", "0, s in C_x gives C_x = -C_x"));

    let mut t = Tally::new();
    for (x, c) in &sets {
        for &i in c
            .iter()
            .filter(|&&i| i != 0 && i != s && c.contains(&neg(i)))
        {
            t.check(!c.contains(&(2 * i % n)), || vec![*x, i]);
        }
    }
    lemmas.push(t.finish(
        "no-double",
        "0, i, -i in C_x with i not in {0, s} gives 2i not in C_x",
    ));

    let mut t = Tally::new();
    let plane = build_full_plane(tower)?;
    for circle in plane.circles() {
        let mirrored: Vec<u64> = circle
            .iter()
            .map(|&i| i as u64)
            .filter(|&i| i < s && circle.contains(&((i + s) as u32)))
            .collect();
        t.check(mirrored.len() <= 1, || mirrored.clone());
    }
    lemmas.push(t.finish(
        "no-two-mirrored-pairs",
        "no circle contains i, j, i+s, j+s for distinct i, j < s",
    ));

    let mut t = Tally::new();
    for (x, c) in &sets {
        let members: Vec<u64> = c.iter().copied().collect();
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let five: BTreeSet<u64> = [0, i, j, 2 * i % n, 2 * j % n].into_iter().collect();
                if five.len() < 5 {
                    continue;
                }
                t.check(!five.iter().all(|p| c.contains(p)), || vec![*x, i, j]);
            }
        }
    }
    lemmas.push(t.finish(
        "no-double-pair",
        "no C_x contains five distinct points 0, i, j, 2i, 2j",
    ));

    Ok(LemmaReport { q, lemmas })
}
