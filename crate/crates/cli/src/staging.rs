use std::fs;
use std::path::{Path, PathBuf};

use crate::error::CliError;

/// Collects output files in a hidden directory and moves them into place
/// only when every file has been written. Dropping an uncommitted staging
/// area deletes it.
pub struct Staging {
    target: PathBuf,
    dir: PathBuf,
    files: Vec<String>,
    committed: bool,
}

impl Staging {
    pub fn new(target: &Path) -> Result<Self, CliError> {
        fs::create_dir_all(target).map_err(|e| CliError::output(target, e))?;
        let dir = target.join(format!(".staging-{}", std::process::id()));
        if dir.exists() {
            fs::remove_dir_all(&dir).map_err(|e| CliError::output(&dir, e))?;
        }
        fs::create_dir(&dir).map_err(|e| CliError::output(&dir, e))?;
        Ok(Staging {
            target: target.to_path_buf(),
            dir,
            files: Vec::new(),
            committed: false,
        })
    }

    pub fn write(&mut self, name: &str, bytes: impl AsRef<[u8]>) -> Result<(), CliError> {
        let path = self.dir.join(name);
        fs::write(&path, bytes).map_err(|e| CliError::output(&path, e))?;
        self.files.push(name.to_string());
        Ok(())
    }

    /// Moves staged files into the target directory. On failure the files
    /// already moved are removed again.
    pub fn commit(mut self) -> Result<Vec<PathBuf>, CliError> {
        let mut moved = Vec::new();
        for name in &self.files {
            let dst = self.target.join(name);
            if let Err(e) = fs::rename(self.dir.join(name), &dst) {
                for p in &moved {
                    let _ = fs::remove_file(p);
                }
                return Err(CliError::output(&dst, e));
            }
            moved.push(dst);
        }
        self.committed = true;
        let _ = fs::remove_dir_all(&self.dir);
        Ok(moved)
    }
}

impl Drop for Staging {
    fn drop(&mut self) {
        if !self.committed {
            let _ = fs::remove_dir_all(&self.dir);
        }
    }
}
