use cayrev::deciders::{FrFailure, FrVerdict, PgfrFailure, PgfrVerdict};
use cayrev::graphs::CayleyGraph;
use cayrev::groups::GroupElement;
use cayrev::simulator::PairProfile;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde_json::{json, Number, Value};

/// Floats are written with 17 significant digits so reports are byte-stable.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let text = format!("{x:.16e}");
    serde_json::from_str::<Number>(&text)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

pub fn complex(z: Complex64) -> Value {
    json!([float(z.re), float(z.im)])
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn bigint(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn element(x: &GroupElement) -> Value {
    json!(x.residues())
}

pub fn graph_echo(name: Option<&str>, g: &CayleyGraph) -> Value {
    json!({
        "name": name,
        "orders": g.group().orders(),
        "degree": g.degree(),
        "connected": g.is_connected(),
        "integral": g.is_integral(),
    })
}

pub fn pgfr(v: &PgfrVerdict) -> Value {
    match v {
        PgfrVerdict::Yes { d } => json!({ "outcome": "yes", "d": bigint(d) }),
        PgfrVerdict::No(PgfrFailure::NotCospectral) => json!({ "outcome": "no", "reason": "not_cospectral" }),
        PgfrVerdict::No(PgfrFailure::RelationWitness { ell }) => json!({
            "outcome": "no",
            "reason": "relation_witness",
            "witness": ell.iter().map(bigint).collect::<Vec<_>>(),
        }),
    }
}

pub fn fr(v: &FrVerdict) -> Value {
    match v {
        FrVerdict::Yes { t_witness, description } => {
            json!({ "outcome": "yes", "t_witness": float(*t_witness), "description": description })
        }
        FrVerdict::No(f) => {
            let mut out = json!({ "outcome": "no" });
            let reason = match f {
                FrFailure::NotOrderTwo => "not_order_two",
                FrFailure::OddFactor => "odd_factor",
                FrFailure::VanishingBeta => "vanishing_beta",
                FrFailure::IncommensurableDifferences { pair } => {
                    out["pairs"] = json!([[pair[0].0, pair[0].1], [pair[1].0, pair[1].1]]);
                    "incommensurable_differences"
                }
            };
            out["reason"] = json!(reason);
            out
        }
    }
}

pub fn profile(p: &PairProfile) -> Value {
    json!({
        "t": float(p.t),
        "alpha": complex(p.alpha),
        "beta": complex(p.beta),
        "leakage": float(p.leakage),
        "gamma": p.gamma.map(complex),
    })
}

pub fn short_pgfr(v: &PgfrVerdict) -> String {
    match v {
        PgfrVerdict::Yes { d } => format!("yes (d = {d})"),
        PgfrVerdict::No(PgfrFailure::NotCospectral) => "no (not cospectral)".into(),
        PgfrVerdict::No(PgfrFailure::RelationWitness { .. }) => "no (relation witness)".into(),
    }
}

pub fn short_fr(v: &FrVerdict) -> String {
    match v {
        FrVerdict::Yes { t_witness, .. } => format!("yes (t = {t_witness:.6})"),
        FrVerdict::No(f) => format!("no ({f:?})"),
    }
}

/// Serialises with sorted keys and a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are serialisable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(
            serde_json::to_string(&float(std::f64::consts::FRAC_PI_2)).unwrap(),
            "1.5707963267948966e+0"
        );
        assert_eq!(serde_json::to_string(&float(1.0)).unwrap(), "1.0000000000000000e+0");
        assert_eq!(float(f64::NAN), Value::Null);
    }

    #[test]
    fn big_integers_become_strings() {
        assert_eq!(bigint(&BigInt::from(3)), json!(3));
        let huge: BigInt = BigInt::from(i64::MAX) * 4;
        assert_eq!(bigint(&huge), json!(huge.to_string()));
    }

    #[test]
    fn keys_are_sorted() {
        let s = render(&json!({ "zeta": 1, "alpha": 2 }));
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
    }
}
