//! Builds the CLI reports in-process: a comparison and the list of pinned
//! checks.

use charclass::cli::{cmd_compare, pinned_checks, Catalog, Format, Pins};

fn main() -> charclass::Result<()> {
    let catalog = Catalog::builtin();
    print!(
        "{}",
        cmd_compare(&catalog, "k3", "kodaira_w_surface")?.render(Format::Markdown)
    );

    let checks = pinned_checks(&catalog, &Pins::builtin());
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
    println!("\n{} checks, {} failed", checks.len(), failed.len());
    for c in &failed {
        println!(
            "  {} / {}: expected {} got {}",
            c.section, c.name, c.expected, c.actual
        );
    }
    if !failed.is_empty() {
        std::process::exit(1);
    }
    Ok(())
}
