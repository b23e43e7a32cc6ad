//! Explicit Cayley-table rings loaded from JSON.
//!
//! ```json
//! { "size": 4, "zero": 0, "one": 1,
//!   "add": [[0,1,2,3], ...], "mul": [[0,0,0,0], ...],
//!   "names": ["0", "1", "a", "b"] }
//! ```
//!
//! `names` is optional; every axiom is re-checked on load.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub size: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

/// A validated table ring in flat row-major form.
#[derive(Clone, Debug)]
pub(crate) struct ValidTable {
    pub size: usize,
    pub zero: u32,
    pub one: u32,
    pub add: Vec<u32>,
    pub mul: Vec<u32>,
    pub names: Vec<String>,
}

impl TableFile {
    pub fn load(path: &Path) -> Result<TableFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            msg: e.to_string(),
        })?;
        serde_json::from_str(&text).map_err(|e| Error::Table(format!("{}: {e}", path.display())))
    }

    pub(crate) fn validate(&self, max_size: usize) -> Result<ValidTable> {
        let n = self.size;
        if n as u128 > max_size as u128 {
            return Err(Error::SizeOverflow {
                size: n as u128,
                max: max_size,
            });
        }
        if n == 0 {
            return Err(Error::Table("size must be positive".into()));
        }
        if self.zero >= n || self.one >= n {
            return Err(Error::Table("zero/one out of range".into()));
        }
        let flat = |name: &str, m: &[Vec<usize>]| -> Result<Vec<u32>> {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(Error::Table(format!("{name} must be a {n}x{n} matrix")));
            }
            let mut out = Vec::with_capacity(n * n);
            for row in m {
                for &v in row {
                    if v >= n {
                        return Err(Error::Table(format!("{name} entry {v} out of range")));
                    }
                    out.push(v as u32);
                }
            }
            Ok(out)
        };
        let add = flat("add", &self.add)?;
        let mul = flat("mul", &self.mul)?;
        let names = match &self.names {
            None => (0..n).map(|i| i.to_string()).collect(),
            Some(names) => {
                if names.len() != n {
                    return Err(Error::Table(format!("expected {n} names")));
                }
                let mut seen = std::collections::HashSet::new();
                for name in names {
                    if name.trim().is_empty()
                        || name.trim() != name
                        || name.contains([',', '(', ')'])
                    {
                        return Err(Error::Table(format!("unusable element name {name:?}")));
                    }
                    if !seen.insert(name.as_str()) {
                        return Err(Error::Table(format!("duplicate element name {name:?}")));
                    }
                }
                names.clone()
            }
        };
        let t = ValidTable {
            size: n,
            zero: self.zero as u32,
            one: self.one as u32,
            add,
            mul,
            names,
        };
        check_axioms(&t)?;
        Ok(t)
    }
}

fn check_axioms(t: &ValidTable) -> Result<()> {
    let n = t.size;
    let add = |a: usize, b: usize| t.add[a * n + b] as usize;
    let mul = |a: usize, b: usize| t.mul[a * n + b] as usize;
    let (zero, one) = (t.zero as usize, t.one as usize);
    let name = |a: usize| t.names[a].as_str();
    let fail = |law: &'static str, w: String| Err(Error::Axiom { law, witness: w });

    if zero == one {
        return fail("1 != 0", format!("one = zero = {}", name(one)));
    }
    for a in 0..n {
        if add(zero, a) != a {
            return fail("additive identity", format!("a={}", name(a)));
        }
        if mul(one, a) != a {
            return fail("multiplicative identity", format!("a={}", name(a)));
        }
        if mul(zero, a) != zero {
            return fail("0*a = 0", format!("a={}", name(a)));
        }
        if !(0..n).any(|b| add(a, b) == zero) {
            return fail("additive inverse", format!("a={}", name(a)));
        }
        for b in 0..n {
            if add(a, b) != add(b, a) {
                return fail(
                    "additive commutativity",
                    format!("(a,b)=({},{})", name(a), name(b)),
                );
            }
            if mul(a, b) != mul(b, a) {
                return fail("commutativity", format!("(a,b)=({},{})", name(a), name(b)));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab_add = add(a, b);
            let ab_mul = mul(a, b);
            for c in 0..n {
                let triple = || format!("(a,b,c)=({},{},{})", name(a), name(b), name(c));
                if add(ab_add, c) != add(a, add(b, c)) {
                    return fail("additive associativity", triple());
                }
                if mul(ab_mul, c) != mul(a, mul(b, c)) {
                    return fail("associativity", triple());
                }
                if mul(a, add(b, c)) != add(ab_mul, mul(a, c)) {
                    return fail("distributivity", triple());
                }
            }
        }
    }
    Ok(())
}
