#include "oraclid/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oraclid {

void save_matrix(const OracleMatrix& S, std::ostream& out) {
  out << "OIP v1 n=" << S.n() << " M=" << S.num_rows() << "\n";
  for (size_t i = 0; i < S.num_rows(); ++i) out << S.row(i).to_string() << "\n";
}

void save_matrix_file(const OracleMatrix& S, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  save_matrix(S, out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("matrix format: " + what);
}

}  // namespace

OracleMatrix load_matrix(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty()) fail("empty input");
  if (content.back() != '\n') fail("missing trailing newline");

  std::istringstream lines(content);
  std::string line;
  // comments are allowed before the header only
  for (;;) {
    if (!std::getline(lines, line)) fail("missing header");
    if (!line.empty() && line[0] == '#') continue;
    break;
  }

  size_t n = 0, M = 0;
  {
    std::istringstream header(line);
    std::string magic, version, nfield, mfield;
    header >> magic >> version >> nfield >> mfield;
    if (magic != "OIP" || version != "v1" || nfield.rfind("n=", 0) != 0 ||
        mfield.rfind("M=", 0) != 0 || !header.eof())
      fail("bad header line '" + line + "'");
    try {
      n = std::stoul(nfield.substr(2));
      M = std::stoul(mfield.substr(2));
    } catch (const std::exception&) {
      fail("bad header numbers '" + line + "'");
    }
  }
  if (n > OracleMatrix::kMaxQubits) fail("n exceeds the size cap");
  if (M == 0) fail("M must be positive");

  size_t N = size_t(1) << n;
  std::vector<std::string> rows;
  rows.reserve(M);
  for (size_t i = 0; i < M; ++i) {
    if (!std::getline(lines, line)) fail("fewer rows than the header declares");
    if (line.size() != N) fail("row length differs from 2^n");
    for (char c : line)
      if (c != '0' && c != '1') fail("row characters must be 0 or 1");
    rows.push_back(line);
  }
  if (std::getline(lines, line)) fail("trailing content after the last row");

  try {
    return OracleMatrix::from_strings(n, rows);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

OracleMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return load_matrix(in);
}

}  // namespace oraclid
