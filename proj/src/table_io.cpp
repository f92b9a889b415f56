#include "raq/table_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace raq {

LeftQuasigroup parse_table(const std::string& text) {
  std::istringstream in(text);
  std::vector<long long> nums;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected an integer, got '" + tok + "'");
      }
    }
  }
  if (nums.empty()) throw std::invalid_argument("empty table file");
  long long n = nums[0];
  if (n < 1 || n > 4096) throw std::invalid_argument("order out of range");
  if (static_cast<long long>(nums.size()) != 1 + n * n)
    throw std::invalid_argument("expected " + std::to_string(n * n) +
                                " entries for order " + std::to_string(n) + ", got " +
                                std::to_string(nums.size() - 1));
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b) {
      long long v = nums[1 + a * n + b];
      if (v < 1 || v > n)
        throw std::invalid_argument("entry " + std::to_string(v) + " in row " +
                                    std::to_string(a + 1) + " is outside 1.." +
                                    std::to_string(n));
      rows[a][b] = static_cast<int>(v - 1);
    }
  return LeftQuasigroup::from_table(rows);
}

LeftQuasigroup load_table_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open table file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_table(buf.str());
}

std::string format_table(const LeftQuasigroup& q) {
  std::ostringstream out;
  out << q.order() << "\n";
  for (int a = 0; a < q.order(); ++a) {
    for (int b = 0; b < q.order(); ++b) {
      if (b) out << ' ';
      out << q.mul(a, b) + 1;
    }
    out << "\n";
  }
  return out.str();
}

} // namespace raq
