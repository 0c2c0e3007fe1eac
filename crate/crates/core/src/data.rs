//! Shipped data files. Embedded at compile time; the `DP1_DATA` environment
//! variable points at a directory whose files take precedence.

use std::borrow::Cow;

use crate::error::{Error, Result};

const EMBEDDED: &[(&str, &str)] = &[
    ("conway.dat", include_str!("../data/conway.dat")),
    ("we7.json", include_str!("../data/we7.json")),
    ("we8.json", include_str!("../data/we8.json")),
    ("h1.json", include_str!("../data/h1.json")),
    ("deg2_existence.json", include_str!("../data/deg2_existence.json")),
    ("deg1_deg2.json", include_str!("../data/deg1_deg2.json")),
    ("lower_bounds.json", include_str!("../data/lower_bounds.json")),
    ("open_cases.json", include_str!("../data/open_cases.json")),
];

pub fn load(name: &str) -> Result<Cow<'static, str>> {
    if let Ok(dir) = std::env::var("DP1_DATA") {
        let path = std::path::Path::new(&dir).join(name);
        if path.exists() {
            return Ok(Cow::Owned(std::fs::read_to_string(path)?));
        }
    }
    EMBEDDED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| Cow::Borrowed(*s))
        .ok_or_else(|| Error::Io(format!("missing data file {name}")))
}
