#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fibsteg/covers.hpp"
#include "fibsteg/embed.hpp"
#include "fibsteg/errors.hpp"
#include "fibsteg/experiment.hpp"
#include "fibsteg/pgm.hpp"
#include "fibsteg/sisr.hpp"
#include "fibsteg/steganalysis.hpp"

namespace fs = std::filesystem;

namespace fibsteg::cli {
namespace {

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
      v = std::stoull(text.substr(2), &used, 16);
      used += 2;
    } else {
      v = std::stoull(text, &used, 10);
    }
  } catch (const std::exception&) {
    throw InputError("invalid seed '" + text + "'");
  }
  if (used != text.size() || text.front() == '-') throw InputError("invalid seed '" + text + "'");
  return v;
}

// --seed wins over the environment; `fallback` applies when neither is set.
std::uint64_t resolve_seed(const std::optional<std::string>& flag, std::optional<std::uint64_t> fallback) {
  if (flag) return parse_seed(*flag);
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') return parse_seed(env);
  if (fallback) return *fallback;
  throw InputError(std::string("a key is required: pass --seed or set ") + kSeedEnv);
}

Method to_method(const std::string& name) {
  if (auto m = parse_method(name)) return *m;
  throw InputError("unknown method '" + name + "' (expected lsb, fib-lsb or map)");
}

BitStream bytes_to_bits(const std::vector<std::uint8_t>& bytes) { return BitStream::from_bytes(bytes); }

std::vector<std::uint8_t> bits_to_bytes(const BitStream& bits) {
  if (bits.size() % 8 != 0) throw CorruptStegoError("extracted payload is not a whole number of bytes");
  return bits.bytes();
}

std::string fixed(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << std::fixed << v;
  return s.str();
}

struct Options {
  // sisr-encode / sisr-decode
  std::string in, out;
  unsigned k = 4;
  // embed / extract
  std::string cover, secret, stego, method = "map";
  std::optional<std::string> seed;
  bool use_sisr = false;
  // analyze
  std::string detector = "both";
  // experiment
  std::string covers, secrets;
  std::vector<std::string> methods{"lsb", "fib-lsb", "map"};
  std::vector<unsigned> block_sizes{4, 8, 16};
  // gen-covers
  std::size_t count = 1, width = 512, height = 512;
  unsigned depth = 8;
  unsigned passes = 3;
  std::string prefix = "cover";
};

int cmd_sisr_encode(const Options& o, std::ostream& out) {
  const auto img = pgm::read(o.in);
  const auto container = sisr::encode_image(img, o.k);
  write_file(o.out, sisr::serialize(container));
  out << "encoded " << img.width() << "x" << img.height() << " into " << container.payload.size()
      << " payload bits (" << fixed(static_cast<double>(container.payload.size()) /
                                   static_cast<double>(img.size() * bits_of(img.depth())))
      << " of original)\n";
  return kOk;
}

int cmd_sisr_decode(const Options& o, std::ostream&) {
  const auto container = sisr::deserialize(read_file(o.in));
  pgm::write(o.out, sisr::decode_image(container));
  return kOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
  const auto method = to_method(o.method);
  const StegoKey key{resolve_seed(o.seed, std::nullopt)};
  const auto cover = pgm::read(o.cover);
  std::vector<std::uint8_t> payload;
  if (o.use_sisr) {
    payload = sisr::serialize(sisr::encode_image(pgm::read(o.secret), o.k));
  } else {
    payload = read_file(o.secret);
    pgm::decode(payload);  // reject non-PGM secrets early
  }
  const auto bits = bytes_to_bits(payload);
  const auto stego = embed_payload(cover, bits, method, key);
  pgm::write(o.out, stego);
  out << "embedded " << bits.size() << " payload bits (+" << kLengthHeaderBits << " header) with "
      << method_name(method) << "; capacity " << capacity_bits(method, cover) << " bits\n";
  return kOk;
}

int cmd_extract(const Options& o, std::ostream&) {
  const auto method = to_method(o.method);
  const StegoKey key{resolve_seed(o.seed, std::nullopt)};
  const auto stego = pgm::read(o.stego);
  const auto bytes = bits_to_bytes(extract_payload(stego, method, key));
  if (o.use_sisr) {
    try {
      pgm::write(o.out, sisr::decode_image(sisr::deserialize(bytes)));
    } catch (const FormatError& e) {
      throw CorruptStegoError(std::string("extracted payload is not a SISR container: ") + e.what());
    }
  } else {
    try {
      pgm::decode(bytes);
    } catch (const FormatError& e) {
      throw CorruptStegoError(std::string("extracted payload is not a PGM image: ") + e.what());
    }
    write_file(o.out, bytes);
  }
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  if (o.detector != "rs" && o.detector != "ws" && o.detector != "both") {
    throw InputError("unknown detector '" + o.detector + "' (expected rs, ws or both)");
  }
  const auto img = pgm::read(o.in);
  if (img.depth() != BitDepth::k8) throw InputError("detectors are defined for 8-bit images only");
  out << "detector,field,value\n";
  if (o.detector != "ws") {
    const auto rs = rs_analyze(img);
    out << "rs,rm," << fixed(rs.rm) << "\nrs,sm," << fixed(rs.sm) << "\nrs,rm_neg," << fixed(rs.rm_neg)
        << "\nrs,sm_neg," << fixed(rs.sm_neg) << "\nrs,estimated_payload,"
        << (rs.estimated_payload ? fixed(*rs.estimated_payload) : std::string("unreliable")) << '\n';
  }
  if (o.detector != "rs") {
    const auto ws = ws_estimate(img);
    out << "ws,raw_estimate," << fixed(ws.raw_estimate) << "\nws,estimated_payload," << fixed(ws.estimated_payload)
        << '\n';
  }
  return kOk;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  ExperimentConfig config;
  config.cover_dir = o.covers;
  config.secret_dir = o.secrets;
  config.methods.clear();
  for (const auto& m : o.methods) config.methods.push_back(to_method(m));
  config.block_sizes = o.block_sizes;
  config.embed_block_size = o.k;
  config.seed = resolve_seed(o.seed, 0);
  config.out_dir = o.out;
  const auto files = run_experiment(config);
  for (const auto& p : {files.reduction_csv, files.reduction_summary_csv, files.quality_csv, files.quality_summary_csv,
                        files.detection_csv, files.detection_summary_csv}) {
    out << p.string() << '\n';
  }
  return kOk;
}

int cmd_gen_covers(const Options& o, std::ostream& out) {
  if (o.width == 0 || o.height == 0) throw InputError("width and height must be positive");
  fs::create_directories(o.out);
  CoverOptions opt;
  opt.width = o.width;
  opt.height = o.height;
  opt.depth = depth_from_bits(o.depth);
  opt.smoothing_passes = o.passes;
  SplitMix64 seeds(resolve_seed(o.seed, 0));
  for (std::size_t i = 0; i < o.count; ++i) {
    std::ostringstream name;
    name << o.prefix << '_' << std::setw(3) << std::setfill('0') << i << ".pgm";
    const auto path = fs::path(o.out) / name.str();
    pgm::write(path, synthetic_cover(opt, seeds.next()));
    out << path.string() << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeckendorf-mapping steganography toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* enc = app.add_subcommand("sisr-encode", "Losslessly reduce a PGM image into a .sisr container");
  enc->add_option("input", o.in, "Input PGM")->required();
  enc->add_option("output", o.out, "Output .sisr")->required();
  enc->add_option("-k,--block-size", o.k, "Block size (4, 8 or 16)");

  auto* dec = app.add_subcommand("sisr-decode", "Restore a PGM image from a .sisr container");
  dec->add_option("input", o.in, "Input .sisr")->required();
  dec->add_option("output", o.out, "Output PGM")->required();

  auto* emb = app.add_subcommand("embed", "Hide a secret PGM image in a cover PGM");
  emb->add_option("--cover", o.cover, "Cover PGM")->required();
  emb->add_option("--secret", o.secret, "Secret PGM")->required();
  emb->add_option("--method", o.method, "lsb, fib-lsb or map");
  emb->add_option("--seed", o.seed, std::string("Key (decimal or 0x-hex); falls back to $") + kSeedEnv);
  emb->add_option("--out", o.out, "Stego PGM")->required();
  emb->add_flag("--sisr", o.use_sisr, "SISR-encode the secret before embedding");
  emb->add_option("-k,--block-size", o.k, "SISR block size");

  auto* ext = app.add_subcommand("extract", "Recover a secret PGM image from a stego PGM");
  ext->add_option("--stego,--in", o.stego, "Stego PGM")->required();
  ext->add_option("--method", o.method, "lsb, fib-lsb or map");
  ext->add_option("--seed", o.seed, std::string("Key (decimal or 0x-hex); falls back to $") + kSeedEnv);
  ext->add_option("--out", o.out, "Recovered secret PGM")->required();
  ext->add_flag("--sisr", o.use_sisr, "Payload is a SISR container");

  auto* ana = app.add_subcommand("analyze", "Run RS and/or WS steganalysis on an 8-bit PGM");
  ana->add_option("--in", o.in, "Image to analyse")->required();
  ana->add_option("--detector", o.detector, "rs, ws or both");

  auto* exp = app.add_subcommand("experiment", "Produce reduction, quality and detection CSV tables");
  exp->add_option("--covers", o.covers, "Directory of cover PGMs")->required();
  exp->add_option("--secrets", o.secrets, "Directory of secret PGMs")->required();
  exp->add_option("--methods", o.methods, "Embedding methods")->delimiter(',');
  exp->add_option("--block-sizes", o.block_sizes, "SISR block sizes for the reduction table")->delimiter(',');
  exp->add_option("-k,--embed-block-size", o.k, "SISR block size for reduced payloads");
  exp->add_option("--seed", o.seed, "Key shared by every method");
  exp->add_option("--out-dir", o.out, "Output directory for CSV files")->required();

  auto* gen = app.add_subcommand("gen-covers", "Write deterministic synthetic cover images");
  gen->add_option("--count", o.count, "Number of covers");
  gen->add_option("--width", o.width, "Width in pixels");
  gen->add_option("--height", o.height, "Height in pixels");
  gen->add_option("--depth", o.depth, "Bit depth (8 or 16)");
  gen->add_option("--passes", o.passes, "3x3 box-filter passes");
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--prefix", o.prefix, "File name prefix");
  gen->add_option("--out-dir", o.out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (enc->parsed()) return cmd_sisr_encode(o, out);
    if (dec->parsed()) return cmd_sisr_decode(o, out);
    if (emb->parsed()) return cmd_embed(o, out);
    if (ext->parsed()) return cmd_extract(o, out);
    if (ana->parsed()) return cmd_analyze(o, out);
    if (exp->parsed()) return cmd_experiment(o, out);
    if (gen->parsed()) return cmd_gen_covers(o, out);
  } catch (const CapacityError& e) {
    err << "error: capacity exceeded: required " << e.required() << " bits, available " << e.available()
        << " bits\n";
    return kCapacityError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace fibsteg::cli
