use std::fmt;

use serde::Serialize;

use crate::set::ElementSet;

/// Evidence attached to a failing verdict. Each theorem's recheck derives
/// the named objects again from the instance before trusting them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `set`, computed from `from`, should be a prime-like hyperideal. `pair`
    /// is the first `(x, y)` with `x∘y ⊆ set` and both escapes outside it;
    /// `None` means `set` is not a hyperideal at all.
    Derived {
        from: ElementSet,
        set: ElementSet,
        pair: Option<(usize, usize)>,
    },
    /// `x ∈ inside` but `x ∉ outside`, where the conclusion needs
    /// `inside ⊆ outside`.
    Escape {
        x: usize,
        inside: ElementSet,
        outside: ElementSet,
    },
    /// The two sides of an equivalence differ on `subject`.
    Disagree {
        subject: Vec<ElementSet>,
        reading: Option<&'static str>,
        lhs: bool,
        rhs: bool,
    },
    /// A set identity `law` fails for the ideals `a` and `b`.
    Law {
        law: &'static str,
        a: ElementSet,
        b: ElementSet,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Derived {
                from,
                set,
                pair: Some((x, y)),
            } => {
                write!(f, "{set} (from {from}) fails at x={x}, y={y}")
            }
            Witness::Derived {
                from,
                set,
                pair: None,
            } => {
                write!(f, "{set} (from {from}) is not a hyperideal")
            }
            Witness::Escape { x, inside, outside } => {
                write!(f, "{x} ∈ {inside} but {x} ∉ {outside}")
            }
            Witness::Disagree {
                subject,
                reading,
                lhs,
                rhs,
            } => {
                write!(f, "sides differ ({lhs} vs {rhs}) at")?;
                for s in subject {
                    write!(f, " {s}")?;
                }
                if let Some(r) = reading {
                    write!(f, " [{r}]")?;
                }
                Ok(())
            }
            Witness::Law { law, a, b } => write!(f, "law {law} fails for {a}, {b}"),
        }
    }
}
