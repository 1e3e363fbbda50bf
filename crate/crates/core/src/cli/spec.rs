//! Group descriptions as JSON.
//!
//! ```json
//! {"kind": "direct",
//!  "left": {"kind": "named", "name": "A5"},
//!  "right": {"kind": "named", "name": "A5"}}
//! ```
//!
//! Elements are written either as ids or, in permutation groups, as cycle
//! lists such as `[[0, 1, 2]]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{
    central_product, direct_product, group_from_permutations, is_named_group, named_group,
    normal_closure, quotient, semidirect_product_from_generators, subgroup_generated, ElemId,
    FiniteGroup, Perm, Subgroup,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Named {
        name: String,
    },
    Perm {
        points: usize,
        /// Each generator as a list of cycles.
        generators: Vec<Vec<Vec<usize>>>,
    },
    Direct {
        left: Box<GroupSpec>,
        right: Box<GroupSpec>,
    },
    Semidirect {
        base: Box<GroupSpec>,
        top: Box<GroupSpec>,
        action: ActionSpec,
    },
    Quotient {
        group: Box<GroupSpec>,
        kernel: ElementList,
    },
    CentralProduct {
        left: Box<GroupSpec>,
        right: Box<GroupSpec>,
        identify: Vec<(ElementSpec, ElementSpec)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementSpec {
    Id(ElemId),
    Cycles(Vec<Vec<usize>>),
}

/// A generator list, or `"center"` / `"derived"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementList {
    Named(String),
    Elements(Vec<ElementSpec>),
}

/// Automorphism tables of the base, one per generator of the top group in
/// the order the top group lists them, or `"swap"` for a base `L × L` and a
/// top group of order 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionSpec {
    Token(String),
    Tables(Vec<Vec<ElemId>>),
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let spec: GroupSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    spec.validate()?;
    Ok(spec)
}

pub fn render_spec(spec: &GroupSpec) -> String {
    serde_json::to_string_pretty(spec).expect("specs serialize")
}

fn validate_list(list: &ElementList) -> Result<()> {
    match list {
        ElementList::Named(t) if t != "center" && t != "derived" => {
            Err(Error::BadElement(format!("unknown element list `{t}`")))
        }
        _ => Ok(()),
    }
}

impl GroupSpec {
    pub fn named(name: &str) -> GroupSpec {
        GroupSpec::Named { name: name.to_string() }
    }

    /// Checks names and tokens without building anything.
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Named { name } => {
                if is_named_group(name) {
                    Ok(())
                } else {
                    Err(Error::UnknownName(name.clone()))
                }
            }
            GroupSpec::Perm { .. } => Ok(()),
            GroupSpec::Direct { left, right } | GroupSpec::CentralProduct { left, right, .. } => {
                left.validate()?;
                right.validate()
            }
            GroupSpec::Semidirect { base, top, action } => {
                base.validate()?;
                top.validate()?;
                match action {
                    ActionSpec::Token(t) if t != "swap" => Err(Error::BadAction(format!("unknown action `{t}`"))),
                    ActionSpec::Token(_) => match &**base {
                        GroupSpec::Direct { left, right } if left == right => Ok(()),
                        _ => Err(Error::BadAction("`swap` needs a base of the form L × L".into())),
                    },
                    ActionSpec::Tables(_) => Ok(()),
                }
            }
            GroupSpec::Quotient { group, kernel } => {
                group.validate()?;
                validate_list(kernel)
            }
        }
    }

    /// A short human-readable name.
    pub fn describe(&self) -> String {
        match self {
            GroupSpec::Named { name } => name.clone(),
            GroupSpec::Perm { points, generators } => format!("<{} perms on {points}>", generators.len()),
            GroupSpec::Direct { left, right } => format!("({} x {})", left.describe(), right.describe()),
            GroupSpec::Semidirect { base, top, .. } => format!("({} : {})", base.describe(), top.describe()),
            GroupSpec::Quotient { group, .. } => format!("{}/N", group.describe()),
            GroupSpec::CentralProduct { left, right, .. } => {
                format!("({} o {})", left.describe(), right.describe())
            }
        }
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Named { name } => named_group(name, cap),
            GroupSpec::Perm { points, generators } => {
                let perms = generators
                    .iter()
                    .map(|c| Perm::from_cycles(*points, c))
                    .collect::<Result<Vec<_>>>()?;
                group_from_permutations(*points, &perms, cap)
            }
            GroupSpec::Direct { left, right } => direct_product(&left.build(cap)?, &right.build(cap)?, cap),
            GroupSpec::Semidirect { base, top, action } => {
                let b = base.build(cap)?;
                let t = top.build(cap)?;
                let pairs: Vec<(ElemId, Vec<ElemId>)> = match action {
                    ActionSpec::Token(_) => {
                        if t.order() != 2 {
                            return Err(Error::BadAction("`swap` needs a top group of order 2".into()));
                        }
                        let r = match &**base {
                            GroupSpec::Direct { right, .. } => right.build(cap)?.order() as ElemId,
                            _ => return Err(Error::BadAction("`swap` needs a base of the form L × L".into())),
                        };
                        let swap = b.elements().map(|x| (x % r) * r + x / r).collect();
                        vec![(t.generators()[0], swap)]
                    }
                    ActionSpec::Tables(tables) => {
                        if tables.len() != t.generators().len() {
                            return Err(Error::BadAction(format!(
                                "{} tables for {} top generators",
                                tables.len(),
                                t.generators().len()
                            )));
                        }
                        if tables.iter().any(|tb| tb.len() != b.order()) {
                            return Err(Error::BadAction("table length differs from the base order".into()));
                        }
                        t.generators().iter().copied().zip(tables.iter().cloned()).collect()
                    }
                };
                semidirect_product_from_generators(&b, &t, &pairs, cap).map_err(|e| match e {
                    Error::ActionNotAutomorphism(_) | Error::ActionNotHomomorphism | Error::BadAction(_) => {
                        Error::BadAction(e.to_string())
                    }
                    other => other,
                })
            }
            GroupSpec::Quotient { group, kernel } => {
                let g = group.build(cap)?;
                let n = resolve_list(&g, kernel)?;
                if !n.is_normal() {
                    return Err(Error::NotNormal("quotient kernel".into()));
                }
                Ok(quotient(&g, &n)?.0)
            }
            GroupSpec::CentralProduct { left, right, identify } => {
                let l = left.build(cap)?;
                let r = right.build(cap)?;
                let pairs = identify
                    .iter()
                    .map(|(a, b)| Ok((resolve_element(&l, a)?, resolve_element(&r, b)?)))
                    .collect::<Result<Vec<_>>>()?;
                central_product(&l, &r, &pairs, cap)
            }
        }
    }
}

pub fn resolve_element(group: &FiniteGroup, e: &ElementSpec) -> Result<ElemId> {
    match e {
        ElementSpec::Id(x) => {
            if (*x as usize) < group.order() {
                Ok(*x)
            } else {
                Err(Error::BadElement(format!("element id {x} out of range")))
            }
        }
        ElementSpec::Cycles(c) => {
            let degree = group
                .permutation(0)
                .map(|p| p.degree())
                .ok_or_else(|| Error::BadElement("cycle notation needs a permutation group".into()))?;
            let p = Perm::from_cycles(degree, c)?;
            group
                .find_permutation(&p)
                .ok_or_else(|| Error::BadElement(format!("{p} is not in the group")))
        }
    }
}

/// The subgroup generated by a list; `center` and `derived` are normal.
pub fn resolve_list(group: &FiniteGroup, list: &ElementList) -> Result<Subgroup> {
    match list {
        ElementList::Named(t) if t == "center" => Ok(group.center()),
        ElementList::Named(t) if t == "derived" => Ok(group.derived_subgroup()),
        ElementList::Named(t) => Err(Error::BadElement(format!("unknown element list `{t}`"))),
        ElementList::Elements(es) => {
            let ids = es.iter().map(|e| resolve_element(group, e)).collect::<Result<Vec<_>>>()?;
            Ok(subgroup_generated(group, &ids))
        }
    }
}

/// The normal closure of a list.
pub fn resolve_normal(group: &FiniteGroup, list: &ElementList) -> Result<Subgroup> {
    let s = resolve_list(group, list)?;
    Ok(normal_closure(group, s.generators()))
}
