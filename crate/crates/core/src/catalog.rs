//! The group-spec mini-language and the catalog of small groups.
//!
//! Grammar (case-insensitive, whitespace ignored):
//!
//! ```text
//! spec   := factor ('x' factor)*
//! factor := 'C' n ('^' k)? | 'D' n | 'Dic' n | 'Q8' | 'A4' | 'S3'
//! ```
//!
//! Products associate to the left.

use crate::error::{Error, Result};
use crate::group::{
    build_cyclic, build_dicyclic, build_dihedral, build_elementary_abelian, build_quaternion,
    direct_product, is_prime, parse_table_text, GroupTable, MAX_ORDER,
};

const A4_TABLE: &str = include_str!("../data/a4.txt");

/// Default upper bound on group orders considered by the classifier.
pub const CATALOG_BOUND: usize = 16;

/// Every group of order at most 12 up to isomorphism, then the stress-test
/// groups `C16`, `C2^4`, `C3^3`.
pub const CATALOG_SPECS: &[&str] = &[
    "C1", "C2", "C3", "C4", "C2^2", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2^3", "D4", "Q8",
    "C9", "C3^2", "C10", "D5", "C11", "C12", "C2xC6", "D6", "Dic3", "A4", "C16", "C2^4", "C3^3",
];

pub fn a4() -> GroupTable {
    parse_table_text(A4_TABLE).expect("shipped A4 table is valid")
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub group: GroupTable,
}

pub fn catalog() -> Vec<CatalogEntry> {
    CATALOG_SPECS
        .iter()
        .map(|&name| CatalogEntry { name, group: parse_group_spec(name).expect("catalog spec parses") })
        .collect()
}

/// Catalog groups with order at most `max_order`, in catalog order.
pub fn catalog_up_to(max_order: usize) -> Vec<CatalogEntry> {
    catalog().into_iter().filter(|e| e.group.order() <= max_order).collect()
}

enum Factor {
    Cyclic(usize),
    Power(usize, usize),
    Dihedral(usize),
    Dicyclic(usize),
    Quaternion,
    Alternating4,
}

impl Factor {
    fn order(&self) -> Option<usize> {
        match *self {
            Factor::Cyclic(n) => Some(n),
            Factor::Power(n, k) => (0..k).try_fold(1usize, |acc, _| acc.checked_mul(n)),
            Factor::Dihedral(n) => n.checked_mul(2),
            Factor::Dicyclic(n) => n.checked_mul(4),
            Factor::Quaternion => Some(8),
            Factor::Alternating4 => Some(12),
        }
    }

    fn build(&self) -> Result<GroupTable> {
        match *self {
            Factor::Cyclic(n) => build_cyclic(n),
            Factor::Power(n, k) if is_prime(n) => build_elementary_abelian(n, k),
            Factor::Power(n, k) => {
                let c = build_cyclic(n)?;
                let mut g = build_cyclic(1)?;
                for _ in 0..k {
                    g = direct_product(&g, &c)?;
                }
                Ok(g)
            }
            Factor::Dihedral(n) => build_dihedral(n),
            Factor::Dicyclic(n) => build_dicyclic(n),
            Factor::Quaternion => Ok(build_quaternion()),
            Factor::Alternating4 => Ok(a4()),
        }
    }
}

struct Parser {
    // (original byte position, lowercased char), whitespace dropped
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, c.to_ascii_lowercase()))
            .collect();
        Parser { chars, pos: 0, end: text.len() }
    }

    fn here(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::SpecParse { position: self.here(), message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        if self.pos + n <= self.chars.len()
            && self.chars[self.pos..self.pos + n].iter().map(|&(_, c)| c).eq(word.chars())
        {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        match digits.parse() {
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.fail("number too large")
            }
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        if self.eat("dic") {
            return Ok(Factor::Dicyclic(self.number()?));
        }
        if self.eat("q8") {
            return Ok(Factor::Quaternion);
        }
        if self.eat("a4") {
            return Ok(Factor::Alternating4);
        }
        if self.eat("s3") {
            return Ok(Factor::Dihedral(3));
        }
        if self.eat("d") {
            let n = self.number()?;
            if n < 2 {
                self.pos -= 1;
                return self.fail("dihedral family starts at D2");
            }
            return Ok(Factor::Dihedral(n));
        }
        if self.eat("c") {
            let n = self.number()?;
            if n == 0 {
                return Err(Error::OrderOutOfRange(0));
            }
            if self.eat("^") {
                let k = self.number()?;
                return Ok(Factor::Power(n, k));
            }
            return Ok(Factor::Cyclic(n));
        }
        self.fail("expected one of C, D, Dic, Q8, A4, S3")
    }
}

/// Parses a group expression such as `C4xC2`, `C2^3` or `D4`.
pub fn parse_group_spec(text: &str) -> Result<GroupTable> {
    let mut p = Parser::new(text);
    let mut factors = vec![p.factor()?];
    while p.peek().is_some() {
        if !p.eat("x") {
            return p.fail("expected `x` between factors");
        }
        factors.push(p.factor()?);
    }
    // check the total order before building anything
    let mut order = 1usize;
    for f in &factors {
        order = f.order().and_then(|o| order.checked_mul(o)).unwrap_or(usize::MAX);
    }
    if order > MAX_ORDER {
        return Err(Error::OrderOutOfRange(order));
    }
    let mut iter = factors.iter();
    let mut g = iter.next().expect("at least one factor").build()?;
    for f in iter {
        g = direct_product(&g, &f.build()?)?;
    }
    let canonical: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    Ok(g.with_spec(canonical))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::element_order;

    #[test]
    fn simple_specs() {
        let c9 = parse_group_spec("C9").unwrap();
        assert_eq!(c9.order(), 9);
        assert_eq!(element_order(&c9, 1), 9);
        assert_eq!(parse_group_spec("c1").unwrap().order(), 1);
        assert_eq!(parse_group_spec(" d 4 ").unwrap().rows(), build_dihedral(4).unwrap().rows());
        assert_eq!(parse_group_spec("S3").unwrap().rows(), build_dihedral(3).unwrap().rows());
        assert_eq!(parse_group_spec("Dic3").unwrap().order(), 12);
        assert_eq!(parse_group_spec("C9").unwrap().spec(), Some("C9"));
    }

    #[test]
    fn products_and_powers() {
        let a = parse_group_spec("C2^3").unwrap();
        let b = parse_group_spec("C2xC2xC2").unwrap();
        assert_eq!(a.rows(), b.rows());
        assert_eq!(a.names(), b.names());

        let c4c2 = parse_group_spec("C4xC2").unwrap();
        let direct = direct_product(&build_cyclic(4).unwrap(), &build_cyclic(2).unwrap()).unwrap();
        assert_eq!(c4c2.rows(), direct.rows());
        assert_eq!(parse_group_spec("C4^2").unwrap().order(), 16);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_group_spec("Z5"), Err(Error::SpecParse { position: 0, .. })));
        assert!(matches!(parse_group_spec("C4y"), Err(Error::SpecParse { position: 2, .. })));
        assert!(matches!(parse_group_spec("C4x"), Err(Error::SpecParse { position: 3, .. })));
        assert!(matches!(parse_group_spec("D1"), Err(Error::SpecParse { .. })));
        assert_eq!(parse_group_spec("C2^7").unwrap_err(), Error::OrderOutOfRange(128));
        assert_eq!(parse_group_spec("C8xC9").unwrap_err(), Error::OrderOutOfRange(72));
        assert_eq!(parse_group_spec("C0").unwrap_err(), Error::OrderOutOfRange(0));
        assert!(parse_group_spec("C99999999999999999999999").is_err());
    }

    #[test]
    fn a4_census() {
        let g = a4();
        let mut census = [0usize; 13];
        for x in g.elements() {
            census[element_order(&g, x)] += 1;
        }
        assert_eq!((census[1], census[2], census[3]), (1, 3, 8));
        assert!(!g.is_abelian());
    }

    #[test]
    fn catalog_contents() {
        let cat = catalog();
        assert_eq!(cat.len(), 27);
        let small: Vec<_> = cat.iter().filter(|e| e.group.order() <= 12).collect();
        // number of groups of each order 1..=12 up to isomorphism
        let expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5];
        for (n, &count) in (1..=12).zip(&expected) {
            assert_eq!(small.iter().filter(|e| e.group.order() == n).count(), count, "order {n}");
        }
        for e in &cat {
            let back = parse_table_text(&e.group.to_table_text()).unwrap();
            assert_eq!(back.rows(), e.group.rows(), "{}", e.name);
        }
    }
}
