//! Writes every built-in record to a directory and reads it back.

use charclass::catalog::{build_builtin, builtin_names, load_record, record_to_toml, save_record};

fn main() -> charclass::Result<()> {
    let dir = std::env::temp_dir().join("charclass-catalog-example");
    std::fs::create_dir_all(&dir).map_err(|source| charclass::Error::Io {
        path: dir.display().to_string(),
        source,
    })?;
    for name in builtin_names() {
        let name = name.replace("(k)", "(3)");
        let r = build_builtin(&name)?;
        let path = dir.join(format!("{name}.toml"));
        save_record(&r, &path)?;
        let back = load_record(&path)?;
        println!(
            "{name:<18} {} round trip {}",
            path.display(),
            if back == r { "ok" } else { "CHANGED" }
        );
    }
    println!("\n{}", record_to_toml(&build_builtin("k3")?)?);
    Ok(())
}
