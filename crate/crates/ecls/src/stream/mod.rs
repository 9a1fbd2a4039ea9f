//! Synthetic video-stream benchmark: temporally correlated scenes of
//! moving geometric objects, the 16-frame batching protocol with sparse
//! annotation masks, and a JSONL ingestion path for external streams.

mod batch;
mod jsonl;
mod render;
mod scenario;

pub use batch::{FrameSource, StreamBatcher};
pub use jsonl::{load_stream, write_stream};
pub use render::render_frame;
pub use scenario::{generate_scenario, MotionPath, ObjectTrack, Scenario, ShapeKind, SizePath};

use serde::{Deserialize, Serialize};

use crate::boxes::BoundingBox;
use crate::error::{Error, Result};
use crate::img::Image;
use crate::kv::KvFile;

/// Frames per stream step: 15 train frames plus one held-out test frame.
pub const BATCH_FRAMES: usize = 16;
pub const TRAIN_FRAMES_PER_BATCH: usize = BATCH_FRAMES - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Test,
}

/// One video frame with its ground truth.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameRecord {
    pub image: Image,
    pub gt_boxes: Vec<BoundingBox>,
    pub gt_classes: Vec<usize>,
    pub frame_index: usize,
    pub is_labeled: bool,
    pub split: Split,
}

impl FrameRecord {
    /// Frame-level sanity: aligned labels, boxes inside the image.
    pub fn validate(&self) -> Result<()> {
        if self.gt_boxes.len() != self.gt_classes.len() {
            return Err(Error::config(format!(
                "frame {}: {} boxes but {} classes",
                self.frame_index,
                self.gt_boxes.len(),
                self.gt_classes.len()
            )));
        }
        let (w, h) = (self.image.width as f64, self.image.height as f64);
        for b in &self.gt_boxes {
            if b.is_degenerate() || b.x1 < 0.0 || b.y1 < 0.0 || b.x2 > w || b.y2 > h {
                return Err(Error::config(format!(
                    "frame {}: box {:?} outside {}x{} image",
                    self.frame_index,
                    b.as_array(),
                    w,
                    h
                )));
            }
        }
        Ok(())
    }
}

/// A 16-frame window split into 15 train frames and one test frame,
/// with the per-batch annotation mask over the train frames.
#[derive(Debug, Clone)]
pub struct StreamBatch {
    pub train_frames: Vec<FrameRecord>,
    pub test_frame: FrameRecord,
    pub step_index: usize,
    pub labeled_mask: Vec<bool>,
}

impl StreamBatch {
    pub fn labeled_frames(&self) -> impl Iterator<Item = &FrameRecord> {
        self.train_frames.iter().filter(|f| f.is_labeled)
    }

    pub fn unlabeled_frames(&self) -> impl Iterator<Item = &FrameRecord> {
        self.train_frames.iter().filter(|f| !f.is_labeled)
    }
}

/// Labeled frames per 16-frame batch at the given annotation cost:
/// `round(cost * 16)` with a floor of one frame, capped at the 15
/// available train frames. Costs below 1/16 are rejected.
pub fn labeled_frames_per_batch(annotation_cost: f64) -> Result<usize> {
    if !annotation_cost.is_finite() || annotation_cost <= 0.0 || annotation_cost > 1.0 {
        return Err(Error::config(format!(
            "annotation_cost must be in (0, 1], got {annotation_cost}"
        )));
    }
    if annotation_cost < 1.0 / BATCH_FRAMES as f64 {
        return Err(Error::config(format!(
            "annotation_cost {annotation_cost} is below the minimum of one labeled frame per batch (1/16 = 0.0625)"
        )));
    }
    let n = (annotation_cost * BATCH_FRAMES as f64).round() as usize;
    Ok(n.max(1).min(TRAIN_FRAMES_PER_BATCH))
}

/// Generator settings for a synthetic stream.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StreamConfig {
    pub class_count: usize,
    pub batches: usize,
    pub image_size: usize,
    pub long_tail: bool,
    pub max_speed: f64,
    pub cooccur_prob: f64,
    pub seed: u64,
    pub tracks_per_class: usize,
}

impl Default for StreamConfig {
    fn default() -> Self {
        StreamConfig {
            class_count: 8,
            batches: 300,
            image_size: 64,
            long_tail: false,
            max_speed: 1.5,
            cooccur_prob: 0.5,
            seed: 1,
            tracks_per_class: 6,
        }
    }
}

impl StreamConfig {
    pub const KEYS: &'static [&'static str] = &[
        "classes",
        "batches",
        "image_size",
        "long_tail",
        "max_speed",
        "cooccur_prob",
        "seed",
        "tracks_per_class",
    ];

    pub fn from_kv(kv: &KvFile) -> Result<Self> {
        let mut cfg = StreamConfig::default();
        if let Some(v) = kv.parse_value::<usize>("classes")? {
            cfg.class_count = v;
        }
        if let Some(v) = kv.parse_value::<usize>("batches")? {
            cfg.batches = v;
        }
        if let Some(v) = kv.parse_value::<usize>("image_size")? {
            cfg.image_size = v;
        }
        if let Some(v) = kv.parse_bool("long_tail")? {
            cfg.long_tail = v;
        }
        if let Some(v) = kv.parse_value::<f64>("max_speed")? {
            cfg.max_speed = v;
        }
        if let Some(v) = kv.parse_value::<f64>("cooccur_prob")? {
            cfg.cooccur_prob = v;
        }
        if let Some(v) = kv.parse_value::<u64>("seed")? {
            cfg.seed = v;
        }
        if let Some(v) = kv.parse_value::<usize>("tracks_per_class")? {
            cfg.tracks_per_class = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.class_count < 2 {
            return Err(Error::config(format!(
                "classes must be at least 2, got {}",
                self.class_count
            )));
        }
        if self.batches == 0 {
            return Err(Error::config("batches must be at least 1"));
        }
        if self.image_size < 32 || self.image_size % 2 != 0 {
            return Err(Error::config(format!(
                "image_size must be an even number >= 32, got {}",
                self.image_size
            )));
        }
        if !(self.max_speed > 0.0) {
            return Err(Error::config("max_speed must be positive"));
        }
        if !(0.0..=1.0).contains(&self.cooccur_prob) {
            return Err(Error::config("cooccur_prob must lie in [0, 1]"));
        }
        if self.tracks_per_class == 0 {
            return Err(Error::config("tracks_per_class must be at least 1"));
        }
        Ok(())
    }

    pub fn total_frames(&self) -> usize {
        self.batches * BATCH_FRAMES
    }
}
