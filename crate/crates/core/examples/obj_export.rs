//! Samples a catalog surface and its conjugate and writes both as Wavefront
//! OBJ files, plus a JSON mesh that the `maxsurf export` command reads back.
//!
//! Run with `cargo run --example obj_export -- [output-dir]`.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::PathBuf;

use maxsurf::cli::{write_obj, MeshFile};
use maxsurf::verify::{sample_pair, triangulate_disk};
use maxsurf::weierstrass::catalog::lookup;
use maxsurf::weierstrass::Immersion;

fn main() -> maxsurf::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map_or_else(|| std::env::temp_dir().join("maxsurf-obj"), PathBuf::from);
    fs::create_dir_all(&dir)?;

    let data = lookup("rational-r0.9")?;
    let im = Immersion::from_data(&data)?;
    let n = 24;
    let (x, xs) = sample_pair(&im, &triangulate_disk(data.domain_radius(), n)?, 1e-10)?;
    for (name, mesh) in [("surface", &x), ("conjugate", &xs)] {
        write_obj(mesh, BufWriter::new(File::create(dir.join(format!("{name}.obj")))?))?;
        fs::write(
            dir.join(format!("{name}.json")),
            serde_json::to_string(&MeshFile::from_surface(mesh))?,
        )?;
    }
    println!(
        "wrote {} vertices (1 + 3n(n+1) = {}) and {} faces per mesh to {}",
        x.positions().len(),
        1 + 3 * n * (n + 1),
        x.param().triangles().len(),
        dir.display()
    );
    Ok(())
}
