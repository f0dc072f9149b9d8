//! JSON representations: exact numbers are JSON integers or `"p/q"` strings,
//! never floats.

use std::collections::BTreeMap;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{Matrix, RatMatrix};
use crate::ring::laurent::LaurentPoly;
use crate::ring::scalar::{parse_rat, rat_to_string, Int, Rat};
use crate::ring::{Gamma, Lambda, RationalFunction};
use crate::seifert::{Parity, SeifertData};

/// A rational that serialises as an integer when integral, else `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            let n = self.0.to_integer();
            if let Ok(v) = i64::try_from(&n) {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&rat_to_string(&self.0))
    }
}

struct RatVisitor;

impl<'de> Visitor<'de> for RatVisitor {
    type Value = JsonRat;

    fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
        write!(f, "an integer or a \"p/q\" string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonRat, E> {
        Ok(JsonRat(Rat::from_integer(Int::from(v))))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonRat, E> {
        Ok(JsonRat(Rat::from_integer(Int::from(v))))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<JsonRat, E> {
        Err(E::custom(format!("floating-point value {v} is not exact; use an integer or \"p/q\"")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonRat, E> {
        parse_rat(v).map(JsonRat).ok_or_else(|| E::custom(format!("not an exact rational: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

pub fn matrix_to_json(m: &RatMatrix) -> Vec<Vec<JsonRat>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(JsonRat).collect()).collect()
}

pub fn matrix_from_json(rows: &[Vec<JsonRat>]) -> Result<RatMatrix, String> {
    let c = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != c) {
        return Err("ragged matrix".into());
    }
    Ok(Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect()))
}

pub fn vec_to_json(v: &[Rat]) -> Vec<JsonRat> {
    v.iter().cloned().map(JsonRat).collect()
}

pub fn vec_from_json(v: &[JsonRat]) -> Vec<Rat> {
    v.iter().map(|x| x.0.clone()).collect()
}

/// `{"n_parity": "odd"|"even", "theta": [[...]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertRecord {
    pub n_parity: Parity,
    pub theta: Vec<Vec<JsonRat>>,
}

impl From<&SeifertData> for SeifertRecord {
    fn from(s: &SeifertData) -> Self {
        SeifertRecord { n_parity: s.parity, theta: matrix_to_json(&s.theta) }
    }
}

impl TryFrom<SeifertRecord> for SeifertData {
    type Error = String;
    fn try_from(r: SeifertRecord) -> Result<Self, String> {
        let m = matrix_from_json(&r.theta)?;
        SeifertData::new(m, r.n_parity).map_err(|e| e.to_string())
    }
}

impl Serialize for SeifertData {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeifertRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SeifertData {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        SeifertData::try_from(SeifertRecord::deserialize(d)?).map_err(de::Error::custom)
    }
}

/// Laurent polynomials as `{"exponent": "coefficient"}`.
pub fn laurent_to_json<C: crate::ring::scalar::Coeff>(p: &LaurentPoly<C>) -> BTreeMap<String, String> {
    p.terms().map(|(e, c)| (e.to_string(), c.to_string())).collect()
}

pub fn laurent_from_json(m: &BTreeMap<String, String>) -> Result<Gamma, String> {
    let mut p = Gamma::zero();
    for (e, c) in m {
        let e: i64 = e.parse().map_err(|_| format!("bad exponent {e:?}"))?;
        let c = parse_rat(c).ok_or_else(|| format!("bad coefficient {c:?}"))?;
        p.add_term(e, c);
    }
    Ok(p)
}

pub fn lambda_from_json(m: &BTreeMap<String, String>) -> Result<Lambda, String> {
    Lambda::from_rational(&laurent_from_json(m)?).ok_or_else(|| "coefficients must be integers".into())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunctionRecord {
    pub num: BTreeMap<String, String>,
    pub den: BTreeMap<String, String>,
}

impl From<&RationalFunction> for RationalFunctionRecord {
    fn from(f: &RationalFunction) -> Self {
        RationalFunctionRecord { num: laurent_to_json(f.num()), den: laurent_to_json(f.den()) }
    }
}

impl RationalFunctionRecord {
    pub fn to_function(&self) -> Result<RationalFunction, String> {
        let den = laurent_from_json(&self.den)?;
        RationalFunction::from_parts(laurent_from_json(&self.num)?, den).ok_or_else(|| "zero denominator".into())
    }
}

/// Parses SeifertData JSON, reporting line and column on failure.
pub fn parse_seifert(text: &str) -> Result<SeifertData, serde_json::Error> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::scalar::rat;

    #[test]
    fn seifert_round_trip() {
        let s = SeifertData::from_i64(&[&[-1, 1], &[0, -1]], Parity::Odd);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"n_parity":"odd","theta":[[-1,1],[0,-1]]}"#);
        assert_eq!(parse_seifert(&text).unwrap(), s);
        let half = SeifertData::new(RatMatrix::from_rows(vec![vec![rat(1, 2)]]), Parity::Even).unwrap();
        let text = serde_json::to_string(&half).unwrap();
        assert!(text.contains("\"1/2\""));
        assert_eq!(parse_seifert(&text).unwrap(), half);
    }

    #[test]
    fn rejects_floats_and_ragged() {
        assert!(parse_seifert(r#"{"n_parity":"odd","theta":[[0.5]]}"#).is_err());
        assert!(parse_seifert(r#"{"n_parity":"odd","theta":[[1,2],[3]]}"#).is_err());
        assert!(parse_seifert(r#"{"n_parity":"odd","theta":[[1,2]]}"#).is_err());
        let err = parse_seifert("{\n\"n_parity\": \"sideways\"}").unwrap_err();
        assert_eq!(err.line(), 2);
    }

    #[test]
    fn laurent_json() {
        let p = Gamma::from_terms([(-1, rat(1, 2)), (2, rat(-3, 1))]);
        let j = laurent_to_json(&p);
        assert_eq!(j.get("-1").map(String::as_str), Some("1/2"));
        assert_eq!(laurent_from_json(&j).unwrap(), p);
    }
}
