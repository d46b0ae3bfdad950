//! JSON interchange: `{"modes", "d_tilde", "sigma_X", "sigma_Y"}` with complex
//! numbers as `[re, im]` and matrices flattened row-major.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{CMat, CVec, C64};

use super::state::GaussianState;
use super::symplectic::GeneratorW;

#[derive(Serialize, Deserialize)]
struct StateJson {
    modes: usize,
    d_tilde: Vec<[f64; 2]>,
    #[serde(rename = "sigma_X")]
    sigma_x: Vec<[f64; 2]>,
    #[serde(rename = "sigma_Y")]
    sigma_y: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorJson {
    modes: usize,
    #[serde(rename = "X")]
    x: Vec<[f64; 2]>,
    #[serde(rename = "Y")]
    y: Vec<[f64; 2]>,
    #[serde(default)]
    gamma_tilde: Option<Vec<[f64; 2]>>,
}

fn pairs(it: impl Iterator<Item = C64>) -> Vec<[f64; 2]> {
    it.map(|z| [z.re, z.im]).collect()
}

fn row_major(m: &CMat) -> Vec<[f64; 2]> {
    pairs((0..m.nrows()).flat_map(|i| (0..m.ncols()).map(move |j| m[(i, j)])))
}

fn matrix<E: serde::de::Error>(n: usize, v: &[[f64; 2]], name: &str) -> Result<CMat, E> {
    if v.len() != n * n {
        return Err(E::custom(format!("{name}: expected {} entries, got {}", n * n, v.len())));
    }
    Ok(CMat::from_fn(n, n, |i, j| {
        let [a, b] = v[i * n + j];
        C64::new(a, b)
    }))
}

fn vector<E: serde::de::Error>(n: usize, v: &[[f64; 2]], name: &str) -> Result<CVec, E> {
    if v.len() != n {
        return Err(E::custom(format!("{name}: expected {n} entries, got {}", v.len())));
    }
    Ok(CVec::from_iterator(n, v.iter().map(|[a, b]| C64::new(*a, *b))))
}

impl Serialize for GaussianState {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        StateJson {
            modes: self.modes(),
            d_tilde: pairs(self.d_tilde().iter().cloned()),
            sigma_x: row_major(self.sigma_x()),
            sigma_y: row_major(self.sigma_y()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianState {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = StateJson::deserialize(d)?;
        let n = j.modes;
        GaussianState::from_blocks(
            vector(n, &j.d_tilde, "d_tilde")?,
            matrix(n, &j.sigma_x, "sigma_X")?,
            matrix(n, &j.sigma_y, "sigma_Y")?,
        )
        .map_err(D::Error::custom)
    }
}

impl Serialize for GeneratorW {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GeneratorJson {
            modes: self.modes(),
            x: row_major(self.x()),
            y: row_major(self.y()),
            gamma_tilde: Some(pairs(self.gamma_tilde().iter().cloned())),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratorW {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = GeneratorJson::deserialize(d)?;
        let n = j.modes;
        let gamma = match &j.gamma_tilde {
            Some(g) => vector(n, g, "gamma_tilde")?,
            None => CVec::zeros(n),
        };
        GeneratorW::new(matrix(n, &j.x, "X")?, matrix(n, &j.y, "Y")?, gamma).map_err(D::Error::custom)
    }
}
