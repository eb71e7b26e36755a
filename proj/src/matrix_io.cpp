#include "gagc/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace gagc {

namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) throw IoError("matrix file: " + msg);
}

std::uint64_t parse_u64(const std::string& tok, const std::string& what) {
  expect(!tok.empty(), "empty " + what);
  std::uint64_t v = 0;
  for (char c : tok) {
    expect(c >= '0' && c <= '9', what + " '" + tok + "' is not a number");
    expect(v <= (UINT64_MAX - 9) / 10, what + " '" + tok + "' overflows");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& tok,
                                      const std::string& what) {
  std::vector<std::uint64_t> out;
  std::string cur;
  for (char c : tok) {
    if (c == ',') {
      out.push_back(parse_u64(cur, what));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(parse_u64(cur, what));
  return out;
}

// Consumes "key=value" from the token stream.
std::string take_field(std::istringstream& is, const std::string& key) {
  std::string tok;
  expect(static_cast<bool>(is >> tok), "missing header field " + key + "=");
  expect(tok.rfind(key + "=", 0) == 0,
         "expected header field " + key + "=, got '" + tok + "'");
  return tok.substr(key.size() + 1);
}

std::string join(const std::vector<std::uint32_t>& vals) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vals[i]);
  }
  return out;
}

std::string join_fe(const std::vector<Fe>& vals) {
  std::string out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vals[i]);
  }
  return out;
}

}  // namespace

std::string emit_matrix(const LinearCode& code, std::uint32_t e) {
  if (code.ctx == nullptr)
    throw std::invalid_argument("emit_matrix: code has no field");
  const FieldCtx& F = *code.ctx;
  std::string out = "GFMAT p=" + std::to_string(F.p) +
                    " h=" + std::to_string(F.h) + " poly=" + join(F.modulus) +
                    " n=" + std::to_string(code.length()) +
                    " k=" + std::to_string(code.dim_rows()) +
                    " e=" + std::to_string(e);
  if (code.grs.has_value()) {
    out += " alpha=" + join_fe(code.grs->alpha);
    out += " v=" + join_fe(code.grs->v);
  }
  if (code.ext_gamma.has_value())
    out += " ext_gamma=" + std::to_string(*code.ext_gamma);
  out += '\n';
  for (std::size_t r = 0; r < code.gen.rows; ++r) {
    for (std::size_t c = 0; c < code.gen.cols; ++c) {
      if (c) out += ' ';
      out += std::to_string(code.gen.at(r, c));
    }
    out += '\n';
  }
  return out;
}

MatrixFile parse_matrix(const std::string& text) {
  std::istringstream lines(text);
  std::string header;
  expect(static_cast<bool>(std::getline(lines, header)), "empty input");
  std::istringstream hs(header);
  std::string magic;
  hs >> magic;
  expect(magic == "GFMAT", "missing GFMAT magic");

  std::uint64_t p = parse_u64(take_field(hs, "p"), "p");
  std::uint64_t h = parse_u64(take_field(hs, "h"), "h");
  std::vector<std::uint64_t> poly = parse_list(take_field(hs, "poly"), "poly");
  std::uint64_t n = parse_u64(take_field(hs, "n"), "n");
  std::uint64_t k = parse_u64(take_field(hs, "k"), "k");
  std::uint64_t e = parse_u64(take_field(hs, "e"), "e");

  FieldPtr F;
  try {
    F = make_field(static_cast<std::uint32_t>(p),
                   static_cast<std::uint32_t>(h));
  } catch (const std::exception& ex) {
    throw IoError(std::string("matrix file: bad field: ") + ex.what());
  }
  std::vector<std::uint64_t> want(F->modulus.begin(), F->modulus.end());
  expect(poly == want, "poly does not match the canonical modulus of GF(" +
                           std::to_string(p) + "^" + std::to_string(h) + ")");
  expect(e < h, "e out of range");
  expect(n >= 1 && k >= 1, "degenerate dimensions");
  expect(n <= F->q, "n exceeds the field size");

  MatrixFile mf;
  mf.e = static_cast<std::uint32_t>(e);
  mf.code.ctx = F;

  // optional node-multiplier metadata, then end of header
  std::string tok;
  std::vector<Fe> alpha, v;
  bool have_gamma = false;
  Fe gamma = 0;
  while (hs >> tok) {
    auto eq = tok.find('=');
    expect(eq != std::string::npos, "stray header token '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    auto as_fe_list = [&](const std::string& s) {
      std::vector<Fe> out;
      for (std::uint64_t x : parse_list(s, key)) {
        expect(x < F->q, key + " entry out of range");
        out.push_back(static_cast<Fe>(x));
      }
      return out;
    };
    if (key == "alpha") {
      expect(alpha.empty() && v.empty() && !have_gamma, "alpha repeated");
      alpha = as_fe_list(val);
    } else if (key == "v") {
      expect(!alpha.empty() && v.empty() && !have_gamma, "v without alpha");
      v = as_fe_list(val);
    } else if (key == "ext_gamma") {
      expect(!alpha.empty() && !v.empty() && !have_gamma,
             "ext_gamma without alpha/v");
      std::uint64_t g = parse_u64(val, "ext_gamma");
      expect(g < F->q, "ext_gamma out of range");
      gamma = static_cast<Fe>(g);
      have_gamma = true;
    } else {
      expect(false, "unknown header field '" + key + "'");
    }
  }
  expect(alpha.empty() == v.empty(), "alpha without v");
  const std::uint64_t node_count = have_gamma ? n - 1 : n;
  if (!alpha.empty()) {
    expect(alpha.size() == node_count && v.size() == node_count,
           "alpha/v length does not match n");
    mf.code.grs = GrsSpec{std::move(alpha), std::move(v),
                          static_cast<std::size_t>(k)};
  }
  if (have_gamma) {
    expect(mf.code.grs.has_value(), "ext_gamma without alpha/v");
    mf.code.ext_gamma = gamma;
  }

  mf.code.gen = GfMatrix(F, static_cast<std::size_t>(k),
                         static_cast<std::size_t>(n));
  std::string row;
  for (std::uint64_t r = 0; r < k; ++r) {
    expect(static_cast<bool>(std::getline(lines, row)),
           "expected " + std::to_string(k) + " rows, found " +
               std::to_string(r));
    std::istringstream rs(row);
    std::string cell;
    for (std::uint64_t c = 0; c < n; ++c) {
      expect(static_cast<bool>(rs >> cell),
             "row " + std::to_string(r) + " has fewer than " +
                 std::to_string(n) + " entries");
      std::uint64_t x = parse_u64(cell, "entry");
      expect(x < F->q, "entry " + std::to_string(x) + " is not in GF(" +
                           std::to_string(F->q) + ")");
      mf.code.gen.at(static_cast<std::size_t>(r),
                     static_cast<std::size_t>(c)) = static_cast<Fe>(x);
    }
    expect(!(rs >> cell), "row " + std::to_string(r) + " has extra entries");
  }
  while (std::getline(lines, row))
    expect(row.find_first_not_of(" \t\r") == std::string::npos,
           "trailing content after the last row");
  return mf;
}

MatrixFile load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void save_matrix(const std::string& path, const LinearCode& code,
                 std::uint32_t e) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << emit_matrix(code, e);
  if (!out) throw IoError("short write to " + path);
}

}  // namespace gagc
