//! Finite groups stored as dense multiplication tables.
//!
//! Every constructor normalizes the identity to index 0. Tables are
//! immutable once built.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::subset::{translate_right, Subset};

pub const MAX_ORDER: usize = 64;

/// Generator letters for products of cyclic groups. `e` is reserved for the
/// identity.
const LETTERS: [char; 6] = ['a', 'b', 'c', 'd', 'f', 'g'];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    // row-major: table[i * order + j] = i·j
    table: Vec<u8>,
    inverses: Vec<u8>,
    names: Vec<String>,
    spec: Option<String>,
    // Orders of the cyclic factors when the group was built as a product of
    // cyclic groups; drives the `a^2b` naming scheme.
    cyclic_factors: Option<Vec<usize>>,
}

impl GroupTable {
    /// Builds from a table that already has its identity at index 0 and is
    /// known to satisfy the group axioms.
    fn from_trusted(order: usize, table: Vec<u8>, names: Vec<String>, cyclic_factors: Option<Vec<usize>>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverses = vec![0u8; order];
        for i in 0..order {
            let j = (0..order).find(|&j| table[i * order + j] == 0).expect("latin row");
            inverses[i] = j as u8;
        }
        let g = GroupTable { order, table, inverses, names, spec: None, cyclic_factors };
        debug_assert!(g.check_axioms().is_ok());
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    pub fn inverses(&self) -> Vec<usize> {
        self.inverses.iter().map(|&x| x as usize).collect()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn spec(&self) -> Option<&str> {
        self.spec.as_deref()
    }

    pub(crate) fn with_spec(mut self, spec: impl Into<String>) -> Self {
        self.spec = Some(spec.into());
        self
    }

    /// The table as nested rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.iter().map(|&x| x as usize).collect()).collect()
    }

    pub fn power(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(x) } else { x };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.order)
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, items: I) -> Result<Subset> {
        Subset::from_indices(self.order, items)
    }

    /// Checks identity, Latin-square and associativity laws.
    fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for i in 0..n {
            if self.mul(0, i) != i || self.mul(i, 0) != i {
                return Err(Error::NotAGroup(format!("index 0 is not the identity (element {i})")));
            }
            let inv = self.inverse(i);
            if self.mul(i, inv) != 0 || self.mul(inv, i) != 0 {
                return Err(Error::NotAGroup(format!("element {i} has no two-sided inverse")));
            }
        }
        check_associative(n, |i, j| self.mul(i, j))
    }

    /// Renders the Cayley-table text format: the order, one row per line,
    /// then the element names.
    pub fn to_table_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.order).unwrap();
        for row in self.table.chunks(self.order) {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        writeln!(out, "{}", self.names.join(" ")).unwrap();
        out
    }

    /// Looks up an element by display name.
    pub fn element_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Resolves one element token: a display name first, then a raw index,
    /// then a word of single-letter generators with optional integer
    /// exponents such as `a^2b` or `a^-1`.
    pub fn resolve_element(&self, token: &str) -> Result<usize> {
        let token = token.trim();
        if let Some(x) = self.element_by_name(token) {
            return Ok(x);
        }
        if let Ok(i) = token.parse::<usize>() {
            if i < self.order {
                return Ok(i);
            }
            return Err(Error::ElementOutOfRange { index: i, order: self.order });
        }
        self.evaluate_word(token)
            .ok_or_else(|| Error::SubsetParse(format!("unknown element `{token}`")))
    }

    fn evaluate_word(&self, word: &str) -> Option<usize> {
        let chars: Vec<char> = word.chars().collect();
        if chars.is_empty() {
            return None;
        }
        let mut acc = 0;
        let mut pos = 0;
        while pos < chars.len() {
            let atom = self.element_by_name(&chars[pos].to_string())?;
            pos += 1;
            let mut exp: i64 = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let start = pos;
                if pos < chars.len() && chars[pos] == '-' {
                    pos += 1;
                }
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                exp = chars[start..pos].iter().collect::<String>().parse().ok()?;
            }
            acc = self.mul(acc, self.power(atom, exp));
        }
        Some(acc)
    }

    /// Parses `{x, y, ...}`. Commas nested in parentheses (tuple names)
    /// do not split.
    pub fn parse_subset(&self, text: &str) -> Result<Subset> {
        let t = text.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::SubsetParse(format!("expected braces around `{t}`")))?;
        let mut out = Subset::empty(self.order);
        if inner.trim().is_empty() {
            return Ok(out);
        }
        let mut depth = 0i32;
        let mut start = 0;
        let bytes: Vec<char> = inner.chars().collect();
        let mut tokens = Vec::new();
        for (i, &c) in bytes.iter().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    tokens.push(bytes[start..i].iter().collect::<String>());
                    start = i + 1;
                }
                _ => {}
            }
        }
        tokens.push(bytes[start..].iter().collect::<String>());
        for tok in tokens {
            out.insert(self.resolve_element(&tok)?);
        }
        Ok(out)
    }

    pub fn format_subset(&self, s: &Subset) -> String {
        let names: Vec<&str> = s.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn format_elements(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|x| self.names[x].clone()).collect()
    }
}

fn check_associative(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<()> {
    for i in 0..n {
        for j in 0..n {
            let ij = mul(i, j);
            for k in 0..n {
                if mul(ij, k) != mul(i, mul(j, k)) {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails for ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(n))
    }
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn power_name(letter: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => letter.to_string(),
        _ => format!("{letter}^{k}"),
    }
}

fn product_of_cyclic_names(factors: &[usize]) -> Vec<String> {
    let n: usize = factors.iter().product();
    (0..n)
        .map(|mut idx| {
            let mut digits = vec![0; factors.len()];
            for (slot, &m) in digits.iter_mut().zip(factors).rev() {
                *slot = idx % m;
                idx /= m;
            }
            let word: String = digits
                .iter()
                .zip(LETTERS)
                .map(|(&d, l)| power_name(&l.to_string(), d))
                .collect();
            if word.is_empty() {
                "e".to_string()
            } else {
                word
            }
        })
        .collect()
}

/// The cyclic group `C_n`; element `i` is `a^i`.
pub fn build_cyclic(n: usize) -> Result<GroupTable> {
    check_order(n)?;
    let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u8)).collect();
    let factors: Vec<usize> = if n > 1 { vec![n] } else { vec![] };
    let names = product_of_cyclic_names(&factors);
    Ok(GroupTable::from_trusted(n, table, names, Some(factors)))
}

/// `C_p^k` as the `k`-fold direct product of `C_p`; elements are base-`p`
/// digit vectors with the first coordinate most significant.
pub fn build_elementary_abelian(p: usize, k: usize) -> Result<GroupTable> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = (0..k).try_fold(1usize, |acc, _| acc.checked_mul(p)).unwrap_or(usize::MAX);
    check_order(order)?;
    let cp = build_cyclic(p)?;
    let mut g = build_cyclic(1)?;
    for _ in 0..k {
        g = direct_product(&g, &cp)?;
    }
    Ok(g)
}

/// `D_n` of order `2n`: `a^i` at index `i` and `a^i b` at index `n + i`.
pub fn build_dihedral(n: usize) -> Result<GroupTable> {
    if n < 2 {
        return Err(Error::OrderOutOfRange(2 * n));
    }
    check_order(2 * n)?;
    let order = 2 * n;
    let decode = |x: usize| (x % n, x / n);
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let (i, s) = decode(x);
            let (j, t) = decode(y);
            // a^i b^s a^j b^t = a^(i ± j) b^(s+t)
            let r = if s == 0 { (i + j) % n } else { (i + n - j) % n };
            table.push((((s + t) % 2) * n + r) as u8);
        }
    }
    let names = (0..order)
        .map(|x| {
            let (i, s) = decode(x);
            match (power_name("a", i), s) {
                (p, 0) if p.is_empty() => "e".to_string(),
                (p, 0) => p,
                (p, _) => format!("{p}b"),
            }
        })
        .collect();
    Ok(GroupTable::from_trusted(order, table, names, None))
}

/// Dicyclic group of order `4n`: `⟨a, x | a^{2n} = e, x^2 = a^n, x a x^-1 = a^-1⟩`.
/// `a^i` at index `i`, `a^i x` at index `2n + i`.
pub fn build_dicyclic(n: usize) -> Result<GroupTable> {
    if n < 2 {
        return Err(Error::OrderOutOfRange(4 * n));
    }
    check_order(4 * n)?;
    let m = 2 * n;
    let order = 2 * m;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let (i, s) = (x % m, x / m);
            let (j, t) = (y % m, y / m);
            let mut r = if s == 0 { (i + j) % m } else { (i + m - j) % m };
            if s + t == 2 {
                r = (r + n) % m;
            }
            table.push((((s + t) % 2) * m + r) as u8);
        }
    }
    let names = (0..order)
        .map(|x| {
            let (i, s) = (x % m, x / m);
            match (power_name("a", i), s) {
                (p, 0) if p.is_empty() => "e".to_string(),
                (p, 0) => p,
                (p, _) => format!("{p}x"),
            }
        })
        .collect();
    Ok(GroupTable::from_trusted(order, table, names, None))
}

/// The quaternion group `{±1, ±i, ±j, ±k}`, with `1` named `e`.
pub fn build_quaternion() -> GroupTable {
    // Dic2 with a ↦ i, x ↦ j, so a^i x runs over j, k, -j, -k.
    let mut g = build_dicyclic(2).expect("order 8");
    g.names = ["e", "i", "-1", "-i", "j", "k", "-j", "-k"].iter().map(|s| s.to_string()).collect();
    g
}

/// `G × H` with `(x, y)` at index `x·|H| + y`.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    let order = g.order.checked_mul(h.order).ok_or(Error::OrderOutOfRange(usize::MAX))?;
    check_order(order)?;
    let (ng, nh) = (g.order, h.order);
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let p = g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);
            table.push(p as u8);
        }
    }
    let factors = match (&g.cyclic_factors, &h.cyclic_factors) {
        (Some(a), Some(b)) if a.len() + b.len() <= LETTERS.len() => {
            Some(a.iter().chain(b).copied().collect::<Vec<_>>())
        }
        _ => None,
    };
    let names = match &factors {
        Some(f) => product_of_cyclic_names(f),
        None => (0..order)
            .map(|x| {
                let (u, v) = (x / nh, x % nh);
                if u == 0 && v == 0 {
                    "e".to_string()
                } else {
                    format!("({},{})", g.name(u), h.name(v))
                }
            })
            .collect(),
    };
    debug_assert_eq!(names.len(), ng * nh);
    Ok(GroupTable::from_trusted(order, table, names, factors))
}

/// Validates a raw Cayley table and relabels it so the identity sits at
/// index 0, keeping the relative order of the other elements.
#[allow(clippy::needless_range_loop)]
pub fn from_cayley_table(raw: &[Vec<usize>], names: Option<Vec<String>>) -> Result<GroupTable> {
    let n = raw.len();
    check_order(n)?;
    for (i, row) in raw.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {i} has {} entries, expected {n}", row.len())));
        }
        if let Some(j) = row.iter().position(|&v| v >= n) {
            return Err(Error::NotAGroup(format!("entry ({i}, {j}) = {} is out of range", row[j])));
        }
    }
    for i in 0..n {
        let mut seen = Subset::empty(n);
        for j in 0..n {
            if seen.contains(raw[i][j]) {
                return Err(Error::NotAGroup(format!(
                    "row {i} is not a permutation (value {} repeats at column {j})",
                    raw[i][j]
                )));
            }
            seen.insert(raw[i][j]);
        }
    }
    for j in 0..n {
        let mut seen = Subset::empty(n);
        for i in 0..n {
            if seen.contains(raw[i][j]) {
                return Err(Error::NotAGroup(format!(
                    "column {j} is not a permutation (value {} repeats at row {i})",
                    raw[i][j]
                )));
            }
            seen.insert(raw[i][j]);
        }
    }
    let id = (0..n)
        .find(|&e| (0..n).all(|x| raw[e][x] == x && raw[x][e] == x))
        .ok_or_else(|| Error::NotAGroup("no identity element".to_string()))?;
    check_associative(n, |i, j| raw[i][j])?;

    if let Some(names) = &names {
        if names.len() != n {
            return Err(Error::TableParse(format!("expected {n} names, got {}", names.len())));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '{' || c == '}') {
                return Err(Error::TableParse(format!("invalid element name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::TableParse(format!("duplicate element name `{name}`")));
            }
        }
    }

    // old index -> new index
    let mut relabel = vec![0usize; n];
    let mut next = 1;
    for (old, slot) in relabel.iter_mut().enumerate() {
        if old != id {
            *slot = next;
            next += 1;
        }
    }
    let mut old_of = vec![0usize; n];
    for (old, &new) in relabel.iter().enumerate() {
        old_of[new] = old;
    }
    let mut table = Vec::with_capacity(n * n);
    for &oi in &old_of {
        for &oj in &old_of {
            table.push(relabel[raw[oi][oj]] as u8);
        }
    }
    let names = match names {
        Some(names) => old_of.iter().map(|&o| names[o].clone()).collect(),
        None => (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect(),
    };
    Ok(GroupTable::from_trusted(n, table, names, None))
}

/// Parses the Cayley-table text format (see [`GroupTable::to_table_text`]).
pub fn parse_table_text(text: &str) -> Result<GroupTable> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::TableParse("empty input".to_string()))?
        .parse()
        .map_err(|e| Error::TableParse(format!("bad order line: {e}")))?;
    check_order(n)?;
    let mut raw = Vec::with_capacity(n);
    for r in 0..n {
        let line = lines.next().ok_or_else(|| Error::TableParse(format!("missing row {r}")))?;
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::TableParse(format!("row {r}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        raw.push(row);
    }
    let names = lines.next().map(|l| l.split_whitespace().map(String::from).collect());
    if let Some(extra) = lines.next() {
        return Err(Error::TableParse(format!("unexpected trailing line `{extra}`")));
    }
    from_cayley_table(&raw, names)
}

/// Smallest `m ≥ 1` with `x^m = e`.
pub fn element_order(g: &GroupTable, x: usize) -> usize {
    let mut acc = x;
    let mut m = 1;
    while acc != 0 {
        acc = g.mul(acc, x);
        m += 1;
    }
    m
}

/// Closure of `s ∪ {e}` under multiplication. In a finite group this is the
/// generated subgroup.
pub fn generated_subgroup(g: &GroupTable, s: &Subset) -> Subset {
    let mut h = Subset::singleton(g.order(), 0);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for y in s {
            let p = g.mul(x, y);
            if !h.contains(p) {
                h.insert(p);
                frontier.push(p);
            }
        }
    }
    h
}

pub fn is_subgroup(g: &GroupTable, h: &Subset) -> bool {
    h.contains(0)
        && h.iter().all(|x| h.contains(g.inverse(x)) && h.iter().all(|y| h.contains(g.mul(x, y))))
}

/// One representative per coset `Hx` of `h` inside the subgroup `ambient`:
/// the smallest index of each coset, ascending.
pub fn coset_representatives_in(g: &GroupTable, ambient: &Subset, h: &Subset) -> Result<Vec<usize>> {
    if !is_subgroup(g, h) || !is_subgroup(g, ambient) || !h.is_subset_of(ambient) {
        return Err(Error::NotASubgroup);
    }
    let mut covered = Subset::empty(g.order());
    let mut reps = Vec::with_capacity(ambient.len() / h.len());
    for x in ambient {
        if !covered.contains(x) {
            reps.push(x);
            covered = covered.union(&translate_right(g, h, x));
        }
    }
    Ok(reps)
}

/// Representatives `x` whose cosets `Hx` partition `G`.
pub fn left_coset_representatives(g: &GroupTable, h: &Subset) -> Result<Vec<usize>> {
    coset_representatives_in(g, &g.full(), h)
}
