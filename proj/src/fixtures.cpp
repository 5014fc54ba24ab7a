#include "dseries/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dseries/characters.hpp"

namespace dseries {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<Weight> parse_weight_list(const std::string& text) {
  std::vector<Weight> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto bar = text.find('|', start);
    const std::string piece = text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) out.push_back(Weight::parse(piece));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::string join(const std::vector<Weight>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? " (" : "(") + ws[i].str() + ")";
  return out + "}";
}

}  // namespace

Signature parse_signature(std::string_view text) {
  Signature sig;
  std::size_t start = 0;
  require(!text.empty(), "empty signature");
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    std::string_view term = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    require(!term.empty(), "malformed signature '" + std::string(text) + "'");
    const bool is_s = term.back() == 's';
    if (is_s) term.remove_suffix(1);
    int coeff = 1;
    if (!term.empty()) {
      require(std::all_of(term.begin(), term.end(), [](char c) { return c >= '0' && c <= '9'; }),
              "malformed signature '" + std::string(text) + "'");
      coeff = std::stoi(std::string(term));
    }
    (is_s ? sig.negative : sig.positive) += coeff;
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return sig;
}

Fixture parse_fixture(std::string_view text, const std::string& name) {
  Fixture f;
  f.name = name;
  bool has_type = false;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string where = name + ":" + std::to_string(line_no) + ": ";
    const std::string& key = words[0];
    const std::string rest = line.substr(line.find(key) + key.size());
    if (key == "name") {
      require(words.size() == 2, where + "name takes one word");
      f.name = words[1];
    } else if (key == "type") {
      require(words.size() == 2, where + "type takes one letter");
      f.family = parse_family(words[1]);
      has_type = true;
    } else if (key == "rank") {
      require(words.size() == 2, where + "rank takes one integer");
      f.rank = std::stoi(words[1]);
    } else if (key == "lambda_left") {
      f.lambda_left = Weight::parse(rest);
    } else if (key == "lambda_right") {
      f.lambda_right = Weight::parse(rest);
    } else if (key == "witness") {
      f.witness = parse_weight_list(rest);
    } else if (key == "row") {
      require(words.size() == 4, where + "row needs: sig hw dim");
      FixtureRow row;
      row.sig = words[1];
      row.signature = parse_signature(words[1]);
      row.atlas_hw = Weight::parse(words[2]);
      row.dimension = std::stoll(words[3]);
      f.rows.push_back(std::move(row));
    } else {
      throw PreconditionError(where + "unknown key '" + key + "'");
    }
  }
  require(has_type && f.rank >= 1, name + ": type and rank are required");
  const auto n = static_cast<std::size_t>(f.rank);
  require(f.lambda_left.size() == n && f.lambda_right.size() == n, name + ": parameter length does not match rank");
  for (auto& row : f.rows) {
    require(row.atlas_hw.size() == 2 * n, name + ": atlas hw must have length 2*rank");
    row.highest = row.atlas_hw.slice(0, n) + row.atlas_hw.slice(n, 2 * n);
  }
  return f;
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read fixture " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str(), path.stem().string());
}

std::vector<Fixture> load_fixture_dir(const std::filesystem::path& dir) {
  require(std::filesystem::is_directory(dir), "fixture directory " + dir.string() + " does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".fix") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& p : files) out.push_back(load_fixture(p));
  return out;
}

bool indefinite_on(const Fixture& fixture, const std::vector<Weight>& ktypes) {
  int p = 0;
  int q = 0;
  for (const auto& k : ktypes) {
    const auto it = std::find_if(fixture.rows.begin(), fixture.rows.end(), [&](const auto& r) { return r.highest == k; });
    if (it == fixture.rows.end()) return false;
    p += it->signature.positive;
    q += it->signature.negative;
  }
  return p > 0 && q > 0;
}

FixtureReport replay_fixture(const Fixture& f) {
  FixtureReport rep;
  rep.name = f.name;
  const RootDatum datum(f.family, f.rank);

  for (const auto& row : f.rows) {
    const auto dim = weyl_dimension(datum, row.highest);
    if (dim != row.dimension) {
      rep.dimensions_match = false;
      rep.problems.push_back("dim V(" + row.highest.str() + ") = " + std::to_string(dim) + ", table says " +
                             std::to_string(row.dimension));
    }
  }

  std::vector<Weight> all;
  for (const auto& row : f.rows) all.push_back(row.highest);
  const bool table_indefinite = indefinite_on(f, all);

  rep.verdict = full_unitarity(f.lambda_left, f.lambda_right, datum);
  rep.verdict_matches = table_indefinite == !rep.verdict.unitary;
  if (!rep.verdict_matches) {
    rep.problems.push_back(std::string("verdict ") + (rep.verdict.unitary ? "Unitary" : "NonUnitary") +
                           " but the table is " + (table_indefinite ? "indefinite" : "definite"));
  }
  if (!f.witness.empty()) {
    std::vector<Weight> expected = f.witness;
    std::vector<Weight> got = rep.verdict.witness;
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    rep.witness_matches = expected == got;
    if (!rep.witness_matches) rep.problems.push_back("witness " + join(got) + ", expected " + join(expected));
  }
  if (!rep.verdict.unitary) {
    rep.witness_indefinite = indefinite_on(f, rep.verdict.witness);
    if (!rep.witness_indefinite) rep.problems.push_back("table does not show indefiniteness on " + join(rep.verdict.witness));
  }
  return rep;
}

}  // namespace dseries
