use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A coefficient-field variable.
///
/// The derived order is the fixed variable order used by the monomial
/// order: `s`, then `mu_i`, `a_ik`, `b_i`, and finally the two variables
/// `p`, `nu` of the explicit gl(3) reference matrix.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    /// Square root of the deformation parameter, `q = s^2`.
    S,
    /// Simple-root twist parameter `mu_i`.
    Mu(u16),
    /// Multiplicative Cartan twist parameter `a_ik`, `i < k`.
    A(u16, u16),
    /// Multiplicative central twist parameter `b_i`.
    B(u16),
    P,
    Nu,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::S => f.write_str("s"),
            Var::Mu(i) => write!(f, "mu{i}"),
            Var::A(i, k) if i < 10 && k < 10 => write!(f, "a_{i}{k}"),
            Var::A(i, k) => write!(f, "a_{i}_{k}"),
            Var::B(i) => write!(f, "b_{i}"),
            Var::P => f.write_str("p"),
            Var::Nu => f.write_str("nu"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownVariable(name.to_string());
        let index = |digits: &str| -> Result<u16> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(unknown());
            }
            match digits.parse::<u16>() {
                Ok(0) | Err(_) => Err(unknown()),
                Ok(i) => Ok(i),
            }
        };
        match name {
            "s" => Ok(Var::S),
            "p" => Ok(Var::P),
            "nu" => Ok(Var::Nu),
            _ => {
                if let Some(rest) = name.strip_prefix("mu") {
                    Ok(Var::Mu(index(rest)?))
                } else if let Some(rest) = name.strip_prefix("b_") {
                    Ok(Var::B(index(rest)?))
                } else if let Some(rest) = name.strip_prefix("a_") {
                    let (i, k) = match rest.split_once('_') {
                        Some((i, k)) => (index(i)?, index(k)?),
                        None if rest.len() == 2 => (index(&rest[..1])?, index(&rest[1..])?),
                        None => return Err(unknown()),
                    };
                    if i >= k {
                        return Err(unknown());
                    }
                    Ok(Var::A(i, k))
                } else {
                    Err(unknown())
                }
            }
        }
    }
}

/// The ordered variable set of the twisted gl(2N+1) computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarTable {
    vars: Vec<Var>,
}

impl VarTable {
    /// `s, mu1..muN, a_ik (i<k<=N), b_1..b_N`.
    pub fn esoteric(n_half: usize) -> Self {
        let n = n_half as u16;
        let mut vars = vec![Var::S];
        vars.extend((1..=n).map(Var::Mu));
        for i in 1..=n {
            for k in i + 1..=n {
                vars.push(Var::A(i, k));
            }
        }
        vars.extend((1..=n).map(Var::B));
        VarTable { vars }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.vars.contains(&v)
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for v in [
            Var::S,
            Var::Mu(3),
            Var::A(1, 2),
            Var::A(2, 11),
            Var::B(4),
            Var::P,
            Var::Nu,
        ] {
            assert_eq!(v.to_string().parse::<Var>().unwrap(), v);
        }
        assert_eq!(Var::A(1, 2).to_string(), "a_12");
        assert_eq!(Var::B(1).to_string(), "b_1");
    }

    #[test]
    fn rejects_bad_names() {
        for bad in ["q", "mu0", "mu", "a_21", "a_1", "b_", "x1", "gamma"] {
            assert!(bad.parse::<Var>().is_err(), "{bad}");
        }
    }

    #[test]
    fn table_order_and_size() {
        let t = VarTable::esoteric(3);
        assert_eq!(t.len(), 10);
        let mut sorted = t.vars().to_vec();
        sorted.sort();
        assert_eq!(sorted, t.vars());
        assert_eq!(
            t.names(),
            ["s", "mu1", "mu2", "mu3", "a_12", "a_13", "a_23", "b_1", "b_2", "b_3"]
        );
    }
}
