#include "sdm/mask_projection.hpp"

#include <set>

#include "sdm/hash.hpp"
#include "sdm/image_ops.hpp"
#include "sdm/render.hpp"

namespace sdm {

namespace {

std::uint64_t pano_key(const MaskPano& pano) {
  Fnv1a h;
  h.update(&pano.camera.width, sizeof(int));
  h.update(&pano.camera.height, sizeof(int));
  double pose_raw[7] = {pano.pose.position.x(), pano.pose.position.y(), pano.pose.position.z(),
                        pano.pose.rotation.w(), pano.pose.rotation.x(), pano.pose.rotation.y(),
                        pano.pose.rotation.z()};
  h.update(pose_raw, sizeof(pose_raw));
  h.update(pano.image.data.data(), pano.image.data.size());
  return h.digest();
}

}  // namespace

MaskProjection project_masks_to_faces(const TriMesh& mesh, const std::vector<MaskPano>& masks,
                                      const MaskProjectionOptions& options) {
  const size_t nf = mesh.face_count();
  std::vector<double> sum_w(nf, 0.0), sum_wv(nf, 0.0);
  Bvh bvh(mesh);

  std::set<std::uint64_t> seen;
  for (const MaskPano& pano : masks) {
    pano.camera.validate();
    pano.pose.validate();
    if (pano.image.channels != 1 || pano.image.width != pano.camera.width ||
        pano.image.height != pano.camera.height) {
      throw MismatchedInput("project_masks_to_faces: mask does not match its camera");
    }
    if (!is_binary(pano.image)) {
      throw MismatchedInput("project_masks_to_faces: mask is not binary");
    }
    // A duplicated pano adds no information; count it once so scores are
    // invariant to duplication.
    if (!seen.insert(pano_key(pano)).second) continue;

    ImageU8 mask = pano.image;
    if (options.erode_px > 0) mask = erode(mask, options.erode_px);

    GeometryRender render = render_geometry(mesh, bvh, pano.camera, pano.pose, options.threads);

    // Accumulate per pano in raster order, then merge across panos in input
    // order: deterministic regardless of render thread count.
    std::vector<double> pano_w(nf, 0.0), pano_wv(nf, 0.0);
    for (int y = 0; y < mask.height; ++y) {
      for (int x = 0; x < mask.width; ++x) {
        std::int32_t face = render.face_id.at(x, y);
        if (face < 0) continue;
        double depth = render.depth.image.at(x, y);
        double w = 1.0 / std::max(depth, options.min_depth_m);
        pano_w[face] += w;
        if (mask.at(x, y)) pano_wv[face] += w;
      }
    }
    for (size_t f = 0; f < nf; ++f) {
      sum_w[f] += pano_w[f];
      sum_wv[f] += pano_wv[f];
    }
  }

  MaskProjection out;
  out.scores.resize(nf);
  out.labels.resize(nf);
  for (size_t f = 0; f < nf; ++f) {
    if (sum_w[f] <= 0.0) {
      out.scores[f] = kUnobservedScore;
      out.labels[f] = FaceLabel::Unknown;
    } else {
      out.scores[f] = sum_wv[f] / sum_w[f];
      out.labels[f] = out.scores[f] > options.threshold ? FaceLabel::Furniture
                                                        : FaceLabel::Structure;
    }
  }
  return out;
}

}  // namespace sdm
