//! Evaluation of single expressions and presets.

use crate::dsl::{parse_expr, ParseError, Parsed};
use crate::suite::ConfigError;
use serde_json::{json, Map, Value};
use shuffle_forge_core::roots::{CartanType, RootSystem};
use shuffle_forge_core::rootvec::{parse_preset, root_vector, rtt_root_vector};
use shuffle_forge_core::shuffle::{Rat, ShuffleAlgebra, ShuffleElement, Trig};
use shuffle_forge_core::specmaps::{lusztig_member, rtt_member};
use shuffle_forge_core::yangian::{is_good, is_integral};
use std::str::FromStr;

/// What `eval` prints besides the expression and its degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Show {
    Numerator,
    Element,
    Json,
    Membership,
}

impl FromStr for Show {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "numerator" => Ok(Show::Numerator),
            "element" => Ok(Show::Element),
            "json" => Ok(Show::Json),
            "membership" => Ok(Show::Membership),
            _ => Err(format!("unknown view '{s}' (numerator, element, json, membership)")),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Source {
    Expr(String),
    Preset(String),
}

#[derive(Clone, Debug)]
pub struct EvalConfig {
    pub ty: Option<CartanType>,
    pub rank: Option<usize>,
    pub source: Source,
    pub show: Show,
}

impl From<ParseError> for ConfigError {
    fn from(e: ParseError) -> Self {
        ConfigError::Invalid(e.to_string())
    }
}

fn element_fields<F: shuffle_forge_core::shuffle::Flavor>(out: &mut Map<String, Value>, f: &ShuffleElement<F>, show: Show) {
    out.insert("k".into(), json!(f.k));
    match show {
        Show::Numerator => {
            out.insert("numerator".into(), json!(f.num.to_string()));
        }
        Show::Element => {
            out.insert("numerator".into(), json!(f.num.to_string()));
            out.insert("scalar_denominator".into(), json!(f.den.to_string()));
        }
        Show::Json => {
            out.insert("element".into(), f.to_json());
        }
        Show::Membership => {}
    }
}

/// Evaluates Ψ of an expression or preset; returns one JSON record.
pub fn eval(cfg: &EvalConfig) -> Result<Value, ConfigError> {
    let mut out = Map::new();
    match &cfg.source {
        Source::Preset(name) => {
            if cfg.ty.is_some() || cfg.rank.is_some() {
                return Err(ConfigError::Invalid("presets carry their own type and rank".into()));
            }
            let (sys, spec, rtt) = parse_preset(name)?;
            let e = if rtt { rtt_root_vector(&sys, &spec)? } else { root_vector(&sys, &spec)? };
            out.insert("preset".into(), json!(name));
            out.insert("expr".into(), json!(e.render("e")));
            out.insert("type".into(), json!(sys.ty.to_string()));
            out.insert("rank".into(), json!(sys.n));
            let f = ShuffleAlgebra::<Trig>::new(sys.clone()).psi(&e)?;
            element_fields(&mut out, &f, cfg.show);
            if cfg.show == Show::Membership {
                trig_membership(&mut out, &sys, &f)?;
            }
        }
        Source::Expr(text) => {
            let parsed = parse_expr(text)?;
            let ty = cfg.ty.unwrap_or(CartanType::C);
            let rank = cfg.rank.unwrap_or_else(|| parsed.max_color().max(2));
            let sys = RootSystem::new(ty, rank)?;
            if parsed.max_color() > rank {
                return Err(ConfigError::Invalid(format!("color {} exceeds rank {rank}", parsed.max_color())));
            }
            out.insert("expr".into(), json!(parsed.render()));
            out.insert("type".into(), json!(ty.to_string()));
            out.insert("rank".into(), json!(rank));
            match parsed {
                Parsed::Trig(e) => {
                    let f = ShuffleAlgebra::<Trig>::new(sys.clone()).psi(&e)?;
                    element_fields(&mut out, &f, cfg.show);
                    if cfg.show == Show::Membership {
                        trig_membership(&mut out, &sys, &f)?;
                    }
                }
                Parsed::Yangian(e) => {
                    let f = ShuffleAlgebra::<Rat>::new(sys.clone()).psi(&e)?;
                    element_fields(&mut out, &f, cfg.show);
                    if cfg.show == Show::Membership {
                        out.insert("wheel".into(), json!(f.wheel_check(&sys)));
                        out.insert("good".into(), json!(is_good(&sys, &f)?));
                        out.insert("integral".into(), json!(is_integral(&sys, &f)?));
                    }
                }
            }
        }
    }
    Ok(Value::Object(out))
}

fn trig_membership(out: &mut Map<String, Value>, sys: &RootSystem, f: &ShuffleElement<Trig>) -> Result<(), ConfigError> {
    out.insert("wheel".into(), json!(f.wheel_check(sys)));
    out.insert("lusztig".into(), json!(lusztig_member(sys, f)?));
    out.insert("rtt".into(), json!(rtt_member(sys, f)?));
    Ok(())
}
