//! Builders for every permutation / local permutation family of maximum
//! degree, plus a tag-based dispatcher used by the CLI.

mod lpp;
mod pp;

use std::fmt;
use std::ops::Range;

use serde_json::json;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::mvpoly::MultiPoly;
use crate::verify::Label;

pub use lpp::{
    indicator_beta, indicator_poly, lpp_beta, lpp_chain, lpp_indicator, lpp_linear, lpp_power, lpp_power_leading_coeff,
    lpp_restrict, lpp_restrict_at, lpp_three, max_lpp, max_lpp_degree, power_form, restrict_to, smallest_power_b,
    ThreeVarVariant,
};
pub use pp::{
    dickson_middle, is_even_extension_of_f2, max_pp_degree, pp_alpha4, pp_dickson, pp_hn, pp_monomial, pp_product,
    smallest_non_residue, ProductParams, ProductVariant,
};

pub(crate) fn unsupported(family: &'static str, field: &FieldSpec, reason: &str) -> Error {
    Error::UnsupportedField {
        family,
        q: field.q() as u64,
        reason: reason.to_string(),
    }
}

pub(crate) fn applies(r: Result<()>) -> bool {
    r.is_ok()
}

/// `Π_{i ∈ vars} x_i^e` in `n` variables.
pub(crate) fn prod_powers(field: &FieldSpec, n: usize, vars: Range<usize>, e: u64) -> Result<MultiPoly> {
    let mut exps = vec![0u64; n];
    for i in vars {
        exps[i] = e;
    }
    MultiPoly::monomial(field, n, &exps, Elem::ONE)
}

/// `x_1 + … + x_n`.
pub(crate) fn sum_vars(field: &FieldSpec, n: usize) -> Result<MultiPoly> {
    let terms: Vec<(Vec<u64>, Elem)> = (0..n)
        .map(|i| {
            let mut e = vec![0u64; n];
            e[i] = 1;
            (e, Elem::ONE)
        })
        .collect();
    MultiPoly::build(field, n, &terms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    PpHn,
    PpMonomial,
    PpDickson,
    PpAlpha4,
    PpQnr,
    PpNonCube,
    PpMersenne,
    LppBeta,
    LppPower,
    LppIndicator,
    LppChain,
    Lpp3VarA,
    Lpp3VarB,
    Lpp3VarC,
    LppLinear,
    /// Field-dependent choice of a maximum-degree LPP, see [`max_lpp`].
    LppMax,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::PpHn,
        Family::PpMonomial,
        Family::PpDickson,
        Family::PpAlpha4,
        Family::PpQnr,
        Family::PpNonCube,
        Family::PpMersenne,
        Family::LppBeta,
        Family::LppPower,
        Family::LppIndicator,
        Family::LppChain,
        Family::Lpp3VarA,
        Family::Lpp3VarB,
        Family::Lpp3VarC,
        Family::LppLinear,
        Family::LppMax,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::PpHn => "PP_HN",
            Family::PpMonomial => "PP_MONOMIAL",
            Family::PpDickson => "PP_DICKSON",
            Family::PpAlpha4 => "PP_ALPHA4",
            Family::PpQnr => "PP_QNR",
            Family::PpNonCube => "PP_NONCUBE",
            Family::PpMersenne => "PP_MERSENNE",
            Family::LppBeta => "LPP_BETA",
            Family::LppPower => "LPP_POWER",
            Family::LppIndicator => "LPP_INDICATOR",
            Family::LppChain => "LPP_CHAIN",
            Family::Lpp3VarA => "LPP_3VAR_A",
            Family::Lpp3VarB => "LPP_3VAR_B",
            Family::Lpp3VarC => "LPP_3VAR_C",
            Family::LppLinear => "LPP_LINEAR",
            Family::LppMax => "LPP_MAX",
        }
    }

    /// Lower-case CLI name, e.g. `lpp_beta`.
    pub fn cli_name(self) -> String {
        self.tag().to_ascii_lowercase()
    }

    /// Parses a tag or CLI name. The grouped names `pp_product` and
    /// `lpp_three` need a variant (`qnr|noncube|mersenne`, `a|b|c`).
    pub fn parse(name: &str, variant: Option<&str>) -> Result<Family> {
        let norm = name.trim().to_ascii_uppercase().replace('-', "_");
        let var = variant.map(|v| v.trim().to_ascii_uppercase());
        let grouped = |prefix: &str| -> Result<Family> {
            let v = var
                .as_deref()
                .ok_or_else(|| Error::InvalidParam(format!("{name} needs --variant")))?;
            let full = format!("{prefix}{v}");
            Family::ALL
                .into_iter()
                .find(|f| f.tag() == full)
                .ok_or_else(|| Error::InvalidParam(format!("unknown variant {v} for {name}")))
        };
        match norm.as_str() {
            "PP_PRODUCT" => grouped("PP_"),
            "LPP_THREE" | "LPP_3VAR" => grouped("LPP_3VAR_"),
            _ => Family::ALL
                .into_iter()
                .find(|f| f.tag() == norm)
                .ok_or_else(|| Error::InvalidParam(format!("unknown family {name}"))),
        }
    }

    pub fn is_lpp_family(self) -> bool {
        self.tag().starts_with("LPP")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Family-specific parameters; unset fields take the documented defaults.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    /// b for the power construction (default: smallest admissible).
    pub b: Option<u64>,
    /// Recursion depth k for the power construction (default 1).
    pub k: Option<u32>,
    /// Non-residue `a` or constant α for the product families.
    pub constant: Option<Elem>,
    pub g: Option<MultiPoly>,
    pub fy: Option<MultiPoly>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Pp,
    Lpp,
}

/// What a family promises for given parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub vars: usize,
    pub property: Property,
    /// Expected total degree and whether it is established or conjectural;
    /// `None` when no degree is claimed.
    pub degree: Option<(i64, Label)>,
}

fn resolve_b(field: &FieldSpec, params: &FamilyParams) -> Result<u64> {
    match params.b {
        Some(b) => Ok(b),
        None => smallest_power_b(field)
            .ok_or_else(|| Error::NoValidB(format!("no 1 < b < p - 1 coprime to q - 1 for q = {}", field.q()))),
    }
}

/// Degree label for the chain f_n: established for odd p and 2 ≤ n ≤ 4,
/// conjectural for odd p and n ≥ 5, unclaimed otherwise.
pub fn chain_degree_label(field: &FieldSpec, n: usize) -> Option<Label> {
    if field.p() == 2 || field.q() <= 3 || n < 2 {
        None
    } else if n <= 4 {
        Some(Label::Theorem)
    } else {
        Some(Label::ConjectureEvidence)
    }
}

pub fn claim(family: Family, field: &FieldSpec, n: usize, params: &FamilyParams) -> Result<Claim> {
    let q = field.q();
    let thm = |d: i64| Some((d, Label::Theorem));
    let c = match family {
        Family::PpHn => Claim {
            vars: n,
            property: Property::Pp,
            degree: if q > 2 { thm(max_pp_degree(q, n)) } else { None },
        },
        Family::PpMonomial | Family::PpDickson | Family::PpAlpha4 => Claim {
            vars: n,
            property: Property::Pp,
            degree: thm(max_pp_degree(q, n)),
        },
        Family::PpQnr | Family::PpNonCube | Family::PpMersenne => Claim {
            vars: n + 1,
            property: Property::Pp,
            degree: thm(max_pp_degree(q, n + 1)),
        },
        Family::LppBeta | Family::LppIndicator | Family::LppMax if q > 3 => Claim {
            vars: n,
            property: Property::Lpp,
            degree: thm(max_lpp_degree(q, n)),
        },
        Family::LppPower => {
            let b = resolve_b(field, params)?;
            let vars = (b as usize).pow(params.k.unwrap_or(1));
            Claim {
                vars,
                property: Property::Lpp,
                degree: thm(max_lpp_degree(q, vars)),
            }
        }
        Family::LppChain => Claim {
            vars: n,
            property: Property::Lpp,
            degree: chain_degree_label(field, n).map(|l| (max_lpp_degree(q, n), l)),
        },
        Family::Lpp3VarA | Family::Lpp3VarB | Family::Lpp3VarC => Claim {
            vars: 3,
            property: Property::Lpp,
            degree: thm(max_lpp_degree(q, 3)),
        },
        Family::LppBeta | Family::LppIndicator | Family::LppMax | Family::LppLinear => Claim {
            vars: n,
            property: Property::Lpp,
            degree: thm(1),
        },
    };
    Ok(c)
}

/// Builds `family` over `field`. `n` is the number of variables except for
/// the product families (n x-variables plus y), the power construction
/// (b^k variables), and the three-variable families.
pub fn build(family: Family, field: &FieldSpec, n: usize, params: &FamilyParams) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidParam("n must be >= 1".into()));
    }
    let product = |variant| {
        let pp = ProductParams {
            g: params.g.clone(),
            fy: params.fy.clone(),
            constant: params.constant,
        };
        pp_product(field, n, variant, &pp)
    };
    match family {
        Family::PpHn => pp_hn(field, n),
        Family::PpMonomial => pp_monomial(field, n),
        Family::PpDickson => pp_dickson(field, n),
        Family::PpAlpha4 => pp_alpha4(field, n),
        Family::PpQnr => product(ProductVariant::Qnr),
        Family::PpNonCube => product(ProductVariant::NonCube),
        Family::PpMersenne => product(ProductVariant::Mersenne),
        Family::LppBeta => lpp_beta(field, n),
        Family::LppPower => lpp_power(field, resolve_b(field, params)?, params.k.unwrap_or(1)),
        Family::LppIndicator => lpp_indicator(field, n),
        Family::LppChain => lpp_chain(field, n),
        Family::Lpp3VarA => lpp_three(field, ThreeVarVariant::A),
        Family::Lpp3VarB => lpp_three(field, ThreeVarVariant::B),
        Family::Lpp3VarC => lpp_three(field, ThreeVarVariant::C),
        Family::LppLinear => lpp_linear(field, n),
        Family::LppMax => max_lpp(field, n),
    }
}

/// `{"b": .., "k": .., "constant": [...]}` with unset entries omitted.
pub fn params_json(field: &FieldSpec, family: Family, params: &FamilyParams) -> serde_json::Value {
    let mut m = serde_json::Map::new();
    if family == Family::LppPower {
        if let Ok(b) = resolve_b(field, params) {
            m.insert("b".into(), json!(b));
        }
        m.insert("k".into(), json!(params.k.unwrap_or(1)));
    }
    let constant = match family {
        Family::PpQnr => Some(params.constant.map_or_else(|| smallest_non_residue(field, 2), Ok)),
        Family::PpNonCube => Some(params.constant.map_or_else(|| smallest_non_residue(field, 3), Ok)),
        Family::PpMersenne => Some(Ok(params.constant.unwrap_or(Elem::from_rank_unchecked(2)))),
        _ => None,
    };
    if let Some(Ok(c)) = constant {
        m.insert("constant".into(), json!(field.coeffs(c)));
    }
    serde_json::Value::Object(m)
}

/// Whether `family` can be built over `field` (ignoring caps).
pub fn family_applies(family: Family, field: &FieldSpec) -> bool {
    let (p, q) = (field.p(), field.q());
    match family {
        Family::PpHn | Family::LppMax => true,
        Family::PpMonomial => p != 2,
        Family::PpDickson => is_even_extension_of_f2(field),
        Family::PpAlpha4 => q == 4,
        Family::PpQnr => pp::product_applies(field, ProductVariant::Qnr),
        Family::PpNonCube => pp::product_applies(field, ProductVariant::NonCube),
        Family::PpMersenne => pp::product_applies(field, ProductVariant::Mersenne),
        Family::LppBeta => p == 2 && q > 2,
        Family::LppPower => smallest_power_b(field).is_some(),
        Family::LppIndicator => p != 2 && q > 3,
        Family::LppChain => q > 3,
        Family::Lpp3VarA => applies(lpp::check_three(field, ThreeVarVariant::A)),
        Family::Lpp3VarB => applies(lpp::check_three(field, ThreeVarVariant::B)),
        Family::Lpp3VarC => applies(lpp::check_three(field, ThreeVarVariant::C)),
        Family::LppLinear => q <= 3,
    }
}

#[cfg(test)]
mod tests;
