#include "fibsteg/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>

#include "fibsteg/errors.hpp"
#include "fibsteg/metrics.hpp"
#include "fibsteg/pgm.hpp"
#include "fibsteg/sisr.hpp"
#include "fibsteg/steganalysis.hpp"

namespace fs = std::filesystem;

namespace fibsteg {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const std::string& header) : out_(path) {
    if (!out_) throw InputError("cannot write " + path.string());
    out_ << header << '\n';
  }

  template <typename... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    ((out_ << (first ? "" : ",") << fields, first = false), ...);
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

struct Mean {
  double sum = 0.0;
  std::size_t n = 0;
  void add(double v) {
    sum += v;
    ++n;
  }
  std::string str() const { return n == 0 ? "n/a" : num(sum / static_cast<double>(n)); }
};

struct Payload {
  std::string suffix;  // "" for the raw secret, "+sisr" for the reduced one
  BitStream bits;
  double rr = 1.0;
};

}  // namespace

BitStream raw_bits(const GrayImage& img) {
  BitStream bits;
  for (auto p : img.pixels()) bits.append(p, bits_of(img.depth()));
  return bits;
}

std::vector<fs::path> list_pgm(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

void validate(const ExperimentConfig& c) {
  for (const auto* dir : {&c.cover_dir, &c.secret_dir}) {
    if (!fs::is_directory(*dir)) throw InputError("not a directory: " + dir->string());
    if (list_pgm(*dir).empty()) throw InputError("no .pgm files in " + dir->string());
  }
  if (c.methods.empty()) throw InputError("no embedding methods selected");
  if (c.block_sizes.empty()) throw InputError("no block sizes selected");
  for (auto k : c.block_sizes) sisr::check_block_size(k);
  sisr::check_block_size(c.embed_block_size);
  if (c.out_dir.empty()) throw InputError("output directory not set");
}

ExperimentOutputs run_experiment(const ExperimentConfig& c) {
  validate(c);
  fs::create_directories(c.out_dir);
  ExperimentOutputs out{c.out_dir / "reduction.csv",         c.out_dir / "reduction_summary.csv",
                        c.out_dir / "quality.csv",           c.out_dir / "quality_summary.csv",
                        c.out_dir / "detection.csv",         c.out_dir / "detection_summary.csv"};

  const auto cover_files = list_pgm(c.cover_dir);
  const auto secret_files = list_pgm(c.secret_dir);

  // Reduction table: every secret at every block size.
  struct SecretData {
    std::string id;
    GrayImage img;
  };
  std::vector<SecretData> secrets;
  for (const auto& f : secret_files) secrets.push_back({f.stem().string(), pgm::read(f)});

  {
    CsvWriter rows(out.reduction_csv, "image_id,k,original_bits,encoded_bits,rr,zeros_fraction,ones_fraction");
    std::map<unsigned, std::array<Mean, 3>> by_k;
    for (const auto& s : secrets) {
      const std::size_t original = s.img.size() * bits_of(s.img.depth());
      for (auto k : c.block_sizes) {
        const auto container = sisr::encode_image(s.img, k);
        const double rr = reduction_ratio(container.payload.size(), original);
        const auto bal = bit_balance(container.payload);
        rows.row(s.id, k, original, container.payload.size(), num(rr), num(bal.zeros_fraction),
                 num(bal.ones_fraction));
        auto& m = by_k[k];
        m[0].add(rr);
        m[1].add(bal.zeros_fraction);
        m[2].add(bal.ones_fraction);
      }
    }
    CsvWriter summary(out.reduction_summary_csv, "k,images,mean_rr,mean_zeros_fraction,mean_ones_fraction");
    for (const auto& [k, m] : by_k) summary.row(k, m[0].n, m[0].str(), m[1].str(), m[2].str());
  }

  std::vector<std::vector<Payload>> payloads;
  for (const auto& s : secrets) {
    std::vector<Payload> p;
    p.push_back({"", raw_bits(s.img), 1.0});
    auto container = sisr::encode_image(s.img, c.embed_block_size);
    const double rr = reduction_ratio(container.payload.size(), s.img.size() * bits_of(s.img.depth()));
    p.push_back({"+sisr", std::move(container.payload), rr});
    payloads.push_back(std::move(p));
  }

  struct QualityAgg {
    Mean psnr, mse;
    std::size_t identical = 0, capacity_exceeded = 0, n = 0;
  };
  struct DetectAgg {
    Mean rm, sm, rm_neg, sm_neg, rs, ws;
    std::size_t rs_unreliable = 0;
  };
  std::map<std::string, QualityAgg> quality;
  std::map<std::string, DetectAgg> detection;

  CsvWriter qrows(out.quality_csv, "image_id,method,psnr_db,mse,rr,zeros_fraction,capacity");
  CsvWriter drows(out.detection_csv, "image_id,method,rm,sm,rm_neg,sm_neg,rs_estimate,ws_estimate");
  const StegoKey key{c.seed};

  auto detect = [&](const std::string& id, const std::string& label, const GrayImage& img) {
    if (img.depth() != BitDepth::k8 || img.width() < 4 || img.height() < 3) return;
    const auto rs = rs_analyze(img);
    const auto ws = ws_estimate(img);
    drows.row(id, label, num(rs.rm), num(rs.sm), num(rs.rm_neg), num(rs.sm_neg),
              rs.estimated_payload ? num(*rs.estimated_payload) : std::string("unreliable"),
              num(ws.estimated_payload));
    auto& agg = detection[label];
    agg.rm.add(rs.rm);
    agg.sm.add(rs.sm);
    agg.rm_neg.add(rs.rm_neg);
    agg.sm_neg.add(rs.sm_neg);
    if (rs.estimated_payload) {
      agg.rs.add(*rs.estimated_payload);
    } else {
      ++agg.rs_unreliable;
    }
    agg.ws.add(ws.estimated_payload);
  };

  for (const auto& cf : cover_files) {
    const auto cover = pgm::read(cf);
    const std::string cover_id = cf.stem().string();
    detect(cover_id, "none", cover);
    for (std::size_t si = 0; si < secrets.size(); ++si) {
      const std::string id = cover_id + "|" + secrets[si].id;
      for (auto method : c.methods) {
        const double cap = capacity(cover, method);
        for (const auto& payload : payloads[si]) {
          const std::string label = std::string(method_name(method)) + payload.suffix;
          const auto zeros = bit_balance(payload.bits).zeros_fraction;
          auto& agg = quality[label];
          ++agg.n;
          EmbedResult result;
          try {
            result = embed(method, cover, payload.bits, key);
          } catch (const CapacityError&) {
            ++agg.capacity_exceeded;
            qrows.row(id, label, "capacity-exceeded", "n/a", num(payload.rr), num(zeros), num(cap));
            continue;
          }
          const auto q = psnr(cover, result.stego);
          if (q.identical()) {
            ++agg.identical;
          } else {
            agg.psnr.add(*q.psnr_db);
          }
          agg.mse.add(q.mse);
          qrows.row(id, label, q.psnr_db ? num(*q.psnr_db) : std::string("identical"), num(q.mse), num(payload.rr),
                    num(zeros), num(cap));
          detect(id, label, result.stego);
        }
      }
    }
  }

  CsvWriter qsum(out.quality_summary_csv,
                 "method,stegos,mean_psnr_db,mean_mse,identical,capacity_exceeded");
  for (const auto& [label, a] : quality) {
    qsum.row(label, a.n, a.psnr.str(), a.mse.str(), a.identical, a.capacity_exceeded);
  }
  CsvWriter dsum(out.detection_summary_csv,
                 "method,images,mean_rm,mean_sm,mean_rm_neg,mean_sm_neg,mean_rs_estimate,rs_unreliable,mean_ws_estimate");
  for (const auto& [label, a] : detection) {
    dsum.row(label, a.rm.n, a.rm.str(), a.sm.str(), a.rm_neg.str(), a.sm_neg.str(), a.rs.str(), a.rs_unreliable,
             a.ws.str());
  }
  return out;
}

}  // namespace fibsteg
