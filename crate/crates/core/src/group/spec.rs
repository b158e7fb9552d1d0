use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{families, table, FiniteGroup, MAX_GROUP_ORDER};
use crate::error::{Error, Result};

/// Largest degree accepted for `S<n>` and `A<n>`.
pub const MAX_PERMUTATION_DEGREE: usize = 6;

/// A group described by family and parameter.
///
/// Parameters are stored the way the spec grammar writes them: `Dihedral(12)`
/// is `D12`, the dihedral group of order 12, `Dicyclic(12)` is `Q12` and
/// `Semidihedral(16)` is `SD16`.
///
/// Grammar: `Z<n>`, `D<2n>`, `Q<4n>`, `SD<8n>`, `S<n>`, `A<n>`,
/// `<spec>x<spec>` for a direct product and `@<path>` for a table file.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Semidihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Table(PathBuf),
}

impl GroupSpec {
    /// Family name, used for catalog ordering.
    pub fn family(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic(_) => "cyclic",
            GroupSpec::Dihedral(_) => "dihedral",
            GroupSpec::Dicyclic(_) => "dicyclic",
            GroupSpec::Semidihedral(_) => "semidihedral",
            GroupSpec::Symmetric(_) => "symmetric",
            GroupSpec::Alternating(_) => "alternating",
            GroupSpec::Product(..) => "product",
            GroupSpec::Table(_) => "table",
        }
    }

    /// Group order, when it is known without reading a file.
    pub fn expected_order(&self) -> Option<usize> {
        let fact = |n: usize| (1..=n).product::<usize>();
        Some(match self {
            GroupSpec::Cyclic(n)
            | GroupSpec::Dihedral(n)
            | GroupSpec::Dicyclic(n)
            | GroupSpec::Semidihedral(n) => *n,
            GroupSpec::Symmetric(d) => fact(*d),
            GroupSpec::Alternating(d) => (fact(*d) / 2).max(1),
            GroupSpec::Product(a, b) => a.expected_order()?.checked_mul(b.expected_order()?)?,
            GroupSpec::Table(_) => return None,
        })
    }

    fn validate(&self) -> Result<()> {
        let bad = |message: String| Error::Spec {
            spec: self.to_string(),
            message,
        };
        match *self {
            GroupSpec::Cyclic(0) => Err(bad("order must be positive".into())),
            GroupSpec::Dihedral(n) if n == 0 || n % 2 != 0 => {
                Err(bad("dihedral order must be a positive even number".into()))
            }
            GroupSpec::Dicyclic(n) if n == 0 || n % 4 != 0 => {
                Err(bad("dicyclic order must be a positive multiple of 4".into()))
            }
            GroupSpec::Semidihedral(n) if n == 0 || n % 8 != 0 => Err(bad(
                "semidihedral order must be a positive multiple of 8".into(),
            )),
            GroupSpec::Symmetric(d) | GroupSpec::Alternating(d)
                if d == 0 || d > MAX_PERMUTATION_DEGREE =>
            {
                Err(Error::Capacity(format!(
                    "permutation degree {d} outside 1..={MAX_PERMUTATION_DEGREE}"
                )))
            }
            GroupSpec::Product(ref a, ref b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.validate()?;
        if let Some(n) = self.expected_order() {
            if n > MAX_GROUP_ORDER {
                return Err(Error::Capacity(format!(
                    "{self} has order {n}, limit is {MAX_GROUP_ORDER}"
                )));
            }
        }
        match self {
            GroupSpec::Cyclic(n) => families::cyclic(*n),
            GroupSpec::Dihedral(n) => families::dihedral(n / 2),
            GroupSpec::Dicyclic(n) => families::dicyclic(n / 4),
            GroupSpec::Semidihedral(n) => families::semidihedral(n / 8),
            GroupSpec::Symmetric(d) => families::symmetric(*d),
            GroupSpec::Alternating(d) => families::alternating(*d),
            GroupSpec::Product(a, b) => a.build()?.direct_product(&b.build()?),
            GroupSpec::Table(path) => {
                let text = std::fs::read_to_string(path)?;
                table::parse_table(&text)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "Q{n}"),
            GroupSpec::Semidihedral(n) => write!(f, "SD{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Product(a, b) => write!(f, "{a}x{b}"),
            GroupSpec::Table(p) => write!(f, "@{}", p.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |message: &str| Error::Spec {
            spec: s.to_string(),
            message: message.to_string(),
        };
        if let Some(path) = s.strip_prefix('@') {
            if path.is_empty() {
                return Err(bad("missing table path after '@'"));
            }
            return Ok(GroupSpec::Table(PathBuf::from(path)));
        }
        let factors: Vec<&str> = s.split('x').collect();
        if factors.len() > 1 {
            let mut parsed = factors
                .iter()
                .map(|f| parse_atom(f).map_err(|m| bad(&m)))
                .collect::<Result<Vec<_>>>()?
                .into_iter();
            let first = parsed.next().expect("split yields at least one piece");
            return Ok(parsed.fold(first, |acc, g| {
                GroupSpec::Product(Box::new(acc), Box::new(g))
            }));
        }
        parse_atom(s).map_err(|m| bad(&m))
    }
}

fn parse_atom(s: &str) -> std::result::Result<GroupSpec, String> {
    let split = s
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(|| format!("{s:?} has no numeric parameter"))?;
    let (family, digits) = s.split_at(split);
    let n: usize = digits
        .parse()
        .map_err(|_| format!("{digits:?} is not a positive integer"))?;
    let spec = match family {
        "Z" | "C" => GroupSpec::Cyclic(n),
        "D" => GroupSpec::Dihedral(n),
        "Q" => GroupSpec::Dicyclic(n),
        "SD" => GroupSpec::Semidihedral(n),
        "S" => GroupSpec::Symmetric(n),
        "A" => GroupSpec::Alternating(n),
        "" => return Err(format!("{s:?} is missing a family letter")),
        other => return Err(format!("unknown family {other:?}")),
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar() {
        assert_eq!("Z6".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(6));
        assert_eq!(
            "SD16".parse::<GroupSpec>().unwrap(),
            GroupSpec::Semidihedral(16)
        );
        assert_eq!("S3".parse::<GroupSpec>().unwrap(), GroupSpec::Symmetric(3));
        assert_eq!(
            "Z2xZ4".parse::<GroupSpec>().unwrap(),
            GroupSpec::Product(
                Box::new(GroupSpec::Cyclic(2)),
                Box::new(GroupSpec::Cyclic(4))
            )
        );
        assert_eq!(
            "@klein.tbl".parse::<GroupSpec>().unwrap(),
            GroupSpec::Table("klein.tbl".into())
        );
        for s in [
            "Z6", "D12", "Q12", "SD24", "S4", "A5", "Z2xZ2xZ3", "@x/y.tbl",
        ] {
            assert_eq!(s.parse::<GroupSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_bad_specs() {
        for s in ["", "X4", "Z", "D7", "Q10", "SD12", "Zx", "12", "@"] {
            assert!(
                s.parse::<GroupSpec>().and_then(|g| g.build()).is_err(),
                "{s}"
            );
        }
        assert!(matches!(
            "S7".parse::<GroupSpec>().unwrap().build(),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(
            "Z4096".parse::<GroupSpec>().unwrap().build(),
            Err(Error::Capacity(_))
        ));
        assert!(matches!(
            "Z64xZ64".parse::<GroupSpec>().unwrap().build(),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn orders_match_expected() {
        for s in [
            "Z1", "D2", "D48", "Q4", "Q48", "SD8", "SD48", "S1", "S5", "A3", "A6", "Z3xS3",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(
                spec.build().unwrap().order(),
                spec.expected_order().unwrap(),
                "{s}"
            );
        }
    }
}
