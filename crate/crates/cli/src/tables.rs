//! Builders for the table-emitting subcommands. Each returns the complete
//! output document as a string; iteration orders are deterministic, so the
//! bytes are reproducible run to run.

use num_bigint::BigInt;
use serde_json::json;
use symchar::algebra::{scalar_string, Scalar};
use symchar::charformula::normalized_char_in;
use symchar::coeffs::{gen_binom, gn_poly, ContentCtx};
use symchar::hecke::HeckeCharValue;
use symchar::jm::{class_polynomial, profiles_with_complexity};
use symchar::partitions::{enumerate_partitions, Partition};

use crate::render::{bivar_json, csv_quote, json_doc, sympoly_json};
use crate::Format;

struct TableEntry {
    lambda: Partition,
    mu: Partition,
    chi: BigInt,
    chi_hat: Scalar,
}

/// The full character table of S_n, rows `λ`, columns `μ`, both in
/// lexicographically decreasing order.
pub fn character_table(n: u32, format: Format, check_orthogonality: bool) -> String {
    let reps = enumerate_partitions(n, None);
    let classes = enumerate_partitions(n, None);
    let mut entries: Vec<TableEntry> = Vec::with_capacity(reps.len() * classes.len());
    for la in &reps {
        let mut ctx = ContentCtx::new(la.clone());
        let dim = la.dimension();
        for mu in &classes {
            let chi_hat = normalized_char_in(&mut ctx, mu).expect("weights match");
            let chi = chi_hat.clone() * Scalar::from_integer(dim.clone());
            assert!(chi.denom() == &BigInt::from(1), "non-integral character");
            entries.push(TableEntry {
                lambda: la.clone(),
                mu: mu.clone(),
                chi: chi.numer().clone(),
                chi_hat,
            });
        }
    }

    let orthogonality = check_orthogonality.then(|| orthogonal(&entries, &reps, &classes));

    match format {
        Format::Json => {
            let list: Vec<serde_json::Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "lambda": e.lambda.to_string(),
                        "mu": e.mu.to_string(),
                        "chi": e.chi.to_string(),
                        "chi_hat": scalar_string(&e.chi_hat),
                    })
                })
                .collect();
            let mut doc = json!({"n": n, "entries": list});
            if let Some(ok) = orthogonality {
                doc["orthogonality"] = json!(if ok { "pass" } else { "fail" });
            }
            json_doc(&doc)
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&csv_quote("lambda\\mu"));
            for mu in &classes {
                out.push(',');
                out.push_str(&csv_quote(&mu.to_string()));
            }
            out.push('\n');
            for (i, la) in reps.iter().enumerate() {
                out.push_str(&csv_quote(&la.to_string()));
                for j in 0..classes.len() {
                    out.push(',');
                    out.push_str(&entries[i * classes.len() + j].chi.to_string());
                }
                out.push('\n');
            }
            if let Some(ok) = orthogonality {
                out.push_str(&format!("orthogonality,{}\n", if ok { "pass" } else { "fail" }));
            }
            out
        }
        Format::Text => {
            let headers: Vec<String> = classes.iter().map(|m| m.to_string()).collect();
            let rows: Vec<(String, Vec<String>)> = reps
                .iter()
                .enumerate()
                .map(|(i, la)| {
                    let vals = (0..classes.len())
                        .map(|j| entries[i * classes.len() + j].chi.to_string())
                        .collect();
                    (la.to_string(), vals)
                })
                .collect();
            let mut out = format!("character table of S_{n}\n");
            out.push_str(&aligned("lambda\\mu", &headers, &rows));
            if let Some(ok) = orthogonality {
                out.push_str(&format!("orthogonality: {}\n", if ok { "pass" } else { "fail" }));
            }
            out
        }
    }
}

fn orthogonal(entries: &[TableEntry], reps: &[Partition], classes: &[Partition]) -> bool {
    for (j1, mu) in classes.iter().enumerate() {
        for (j2, nu) in classes.iter().enumerate() {
            let mut acc = BigInt::from(0);
            for i in 0..reps.len() {
                acc += &entries[i * classes.len() + j1].chi * &entries[i * classes.len() + j2].chi;
            }
            let expect = if mu == nu { mu.z_weight() } else { BigInt::from(0) };
            if acc != expect {
                return false;
            }
        }
    }
    true
}

fn aligned(corner: &str, headers: &[String], rows: &[(String, Vec<String>)]) -> String {
    let label_width = rows
        .iter()
        .map(|(l, _)| l.len())
        .max()
        .unwrap_or(0)
        .max(corner.len());
    let col_widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(j, h)| {
            rows.iter()
                .map(|(_, vals)| vals[j].len())
                .max()
                .unwrap_or(0)
                .max(h.len())
        })
        .collect();
    let mut out = format!("{corner:<label_width$}");
    for (h, w) in headers.iter().zip(&col_widths) {
        out.push_str(&format!("  {h:>w$}"));
    }
    out.push('\n');
    for (label, vals) in rows {
        out.push_str(&format!("{label:<label_width$}"));
        for (v, w) in vals.iter().zip(&col_widths) {
            out.push_str(&format!("  {v:>w$}"));
        }
        out.push('\n');
    }
    out
}

/// Class polynomials `f_ρ` for all profiles with `|ρ| - l(ρ) ≤ max_k`.
///
/// With a cache directory, each polynomial is read back from
/// `fmu-<rho>.json` when present and written there after computation;
/// unreadable cache files are silently recomputed.
pub fn fmu_table(max_k: u32, format: Format, cache_dir: Option<&std::path::Path>) -> String {
    let mut entries = Vec::new();
    for k in 1..=max_k {
        for rho in profiles_with_complexity(k) {
            let cached = cache_dir.and_then(|dir| load_cached_fmu(dir, &rho));
            let cp = match cached {
                Some(cp) => cp,
                None => {
                    let cp = class_polynomial(&rho).expect("profiles have no unary parts");
                    if let Some(dir) = cache_dir {
                        store_cached_fmu(dir, &cp);
                    }
                    cp
                }
            };
            entries.push((k, cp));
        }
    }
    match format {
        Format::Json => {
            let list: Vec<serde_json::Value> = entries
                .iter()
                .map(|(k, cp)| {
                    json!({
                        "rho": cp.rho.to_string(),
                        "complexity": k,
                        "z": cp.z_tilde.to_string(),
                        "f": cp.f.to_string(),
                        "terms": sympoly_json(&cp.f),
                    })
                })
                .collect();
            json_doc(&json!({"max_k": max_k, "entries": list}))
        }
        Format::Csv => {
            let mut out = String::from("rho,complexity,z,f\n");
            for (k, cp) in &entries {
                out.push_str(&format!(
                    "{},{k},{},{}\n",
                    csv_quote(&cp.rho.to_string()),
                    cp.z_tilde,
                    csv_quote(&cp.f.to_string())
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (k, cp) in &entries {
                out.push_str(&format!(
                    "rho=({})  k={k}  z={}\n  f = {}\n",
                    cp.rho, cp.z_tilde, cp.f
                ));
            }
            out
        }
    }
}

fn fmu_cache_path(dir: &std::path::Path, rho: &Partition) -> std::path::PathBuf {
    let tag = rho
        .parts()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join("-");
    dir.join(format!("fmu-{tag}.json"))
}

fn load_cached_fmu(dir: &std::path::Path, rho: &Partition) -> Option<symchar::jm::ClassPolynomial> {
    let text = std::fs::read_to_string(fmu_cache_path(dir, rho)).ok()?;
    let doc: serde_json::Value = serde_json::from_str(&text).ok()?;
    if doc["rho"].as_str()? != rho.to_string() {
        return None;
    }
    let z_tilde: BigInt = doc["z"].as_str()?.parse().ok()?;
    let f = crate::render::sympoly_from_json(&doc["terms"])?;
    Some(symchar::jm::ClassPolynomial { rho: rho.clone(), f, z_tilde })
}

fn store_cached_fmu(dir: &std::path::Path, cp: &symchar::jm::ClassPolynomial) {
    if std::fs::create_dir_all(dir).is_err() {
        return;
    }
    let doc = json!({
        "rho": cp.rho.to_string(),
        "z": cp.z_tilde.to_string(),
        "terms": sympoly_json(&cp.f),
    });
    let _ = std::fs::write(fmu_cache_path(dir, &cp.rho), json_doc(&doc));
}

/// One Hecke character value.
pub fn hecke_single(lambda: &Partition, mu: &Partition, format: Format) -> Result<String, String> {
    let value = HeckeCharValue::compute(lambda, mu).map_err(|e| e.to_string())?;
    Ok(hecke_render(&[value], format, None))
}

/// Hecke character table at weight `n`.
pub fn hecke_table(n: u32, format: Format) -> String {
    let mut values = Vec::new();
    for la in enumerate_partitions(n, None) {
        for mu in enumerate_partitions(n, None) {
            values.push(HeckeCharValue::compute(&la, &mu).expect("weights match"));
        }
    }
    hecke_render(&values, format, Some(n))
}

fn hecke_render(values: &[HeckeCharValue], format: Format, n: Option<u32>) -> String {
    match format {
        Format::Json => {
            let list: Vec<serde_json::Value> = values
                .iter()
                .map(|v| {
                    json!({
                        "lambda": v.lambda.to_string(),
                        "mu": v.mu.to_string(),
                        "normalized": bivar_json(&v.normalized),
                        "raw": bivar_json(&v.raw),
                    })
                })
                .collect();
            let doc = match n {
                Some(n) => json!({"n": n, "entries": list}),
                None => json!({"entries": list}),
            };
            json_doc(&doc)
        }
        Format::Csv => {
            let mut out = String::from("lambda,mu,normalized,raw\n");
            for v in values {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    csv_quote(&v.lambda.to_string()),
                    csv_quote(&v.mu.to_string()),
                    csv_quote(&v.normalized.to_string_with("q1", "q2")),
                    csv_quote(&v.raw.to_string_with("q1", "q2")),
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for v in values {
                out.push_str(&format!(
                    "lambda=({})  mu=({})\n  normalized = {}\n  raw        = {}\n",
                    v.lambda,
                    v.mu,
                    v.normalized.to_string_with("q1", "q2"),
                    v.raw.to_string_with("q1", "q2"),
                ));
            }
            out
        }
    }
}

/// Generalized binomial values `⟨n,p,k⟩` together with the coefficients of
/// the generating polynomial `G_n` (equal by construction; both are listed).
pub fn coeffs_table(n: u32, format: Format) -> String {
    let g = gn_poly(n);
    let mut nbi_entries = Vec::new();
    for p in 0..=n {
        for k in 1..=n.max(1) {
            if k > n {
                continue;
            }
            nbi_entries.push((p, k, gen_binom(n, p, k)));
        }
    }
    let gn_entries: Vec<(u32, u32, BigInt)> =
        g.terms().map(|(&(p, k), c)| (p, k, c.clone())).collect();

    match format {
        Format::Json => {
            let nbi: Vec<serde_json::Value> = nbi_entries
                .iter()
                .map(|(p, k, v)| json!({"p": p, "k": k, "value": v.to_string()}))
                .collect();
            let gn: Vec<serde_json::Value> = gn_entries
                .iter()
                .map(|(p, k, v)| json!({"p": p, "k": k, "coeff": v.to_string()}))
                .collect();
            json_doc(&json!({"n": n, "nbi": nbi, "gn": gn}))
        }
        Format::Csv => {
            let mut out = String::from("table,p,k,value\n");
            for (p, k, v) in &nbi_entries {
                out.push_str(&format!("nbi,{p},{k},{v}\n"));
            }
            for (p, k, v) in &gn_entries {
                out.push_str(&format!("gn,{p},{k},{v}\n"));
            }
            out
        }
        Format::Text => {
            let mut out = format!("generalized binomials <{n},p,k>: rows p, columns k\n");
            let headers: Vec<String> = (1..=n.max(1)).filter(|&k| k <= n).map(|k| k.to_string()).collect();
            let rows: Vec<(String, Vec<String>)> = (0..=n)
                .map(|p| {
                    let vals = nbi_entries
                        .iter()
                        .filter(|(ep, _, _)| *ep == p)
                        .map(|(_, _, v)| v.to_string())
                        .collect();
                    (format!("p={p}"), vals)
                })
                .collect();
            if !headers.is_empty() {
                out.push_str(&aligned("p\\k", &headers, &rows));
            }
            out.push_str(&format!("G_{n} nonzero coefficients (y^p z^k):\n"));
            for (p, k, v) in &gn_entries {
                out.push_str(&format!("  y^{p} z^{k}: {v}\n"));
            }
            out
        }
    }
}
