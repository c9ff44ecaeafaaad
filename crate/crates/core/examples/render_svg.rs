//! Write the Farey fan and the bamboo of 7/5 as SVG files.
//!
//! `cargo run --example render_svg -- out/`

use std::path::PathBuf;

use friezes::{render_svg, Model, PositiveCF, RenderConfig, RenderTarget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir)?;
    let cf: PositiveCF = "[1,2,1,1]".parse()?;
    for model in [Model::HalfPlane, Model::Disk] {
        let cfg = RenderConfig {
            model,
            depth: 4,
            ..RenderConfig::default()
        };
        let tag = if model == Model::Disk { "disk" } else { "halfplane" };
        for (name, target) in [("farey", RenderTarget::Farey), ("bamboo", RenderTarget::Bamboo(&cf))] {
            let path = dir.join(format!("{name}_{tag}.svg"));
            std::fs::write(&path, render_svg(&target, &cfg)?)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}
