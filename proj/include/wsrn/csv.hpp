#ifndef WSRN_CSV_HPP
#define WSRN_CSV_HPP

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace wsrn {

// Locale-independent numeric formatting: 6 significant digits, '.' decimal
// separator. Keeps CSV output byte-identical across environments.
std::string fmt_num(double v);
std::string fmt_int(std::int64_t v);

// Minimal CSV emitter; rows are newline-terminated.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    void row(const std::vector<std::string>& cells);
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
};

}  // namespace wsrn

#endif  // WSRN_CSV_HPP
