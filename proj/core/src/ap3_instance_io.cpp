#include "ap3/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cmcs/errors.hpp"

namespace ap3 {

using cmcs::IoError;

void write_instance(std::ostream& os, const Instance& inst) {
    const int n = inst.size();
    os << "AP3 " << n << ' ' << to_string(inst.family()) << ' ' << inst.seed() << '\n';
    for (int i = 0; i < n; ++i) {
        if (i > 0) os << '\n';
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (k > 0) os << ' ';
                os << inst.cost(i, j, k);
            }
            os << '\n';
        }
    }
}

namespace {

bool is_comment(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos != std::string::npos && line[pos] == '#';
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

template <class T>
T parse_number(const std::string& token, const char* what) {
    T value{};
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) throw IoError(std::string("bad ") + what + " '" + token + "'");
    return value;
}

}  // namespace

Instance read_instance(std::istream& is, std::string name) {
    std::string line;
    std::vector<std::string> header;
    while (std::getline(is, line)) {
        if (is_comment(line) || is_blank(line)) continue;
        std::istringstream ss(line);
        for (std::string tok; ss >> tok;) header.push_back(tok);
        break;
    }
    if (header.size() != 4 || header[0] != "AP3")
        throw IoError("instance header must read 'AP3 <n> <family> <seed>'");
    const int n = parse_number<int>(header[1], "instance size");
    if (n < 1) throw IoError("instance size must be at least 1");
    Family family;
    try {
        family = parse_family(header[2]);
    } catch (const cmcs::ContractViolation& e) {
        throw IoError(e.what());
    }
    const auto seed = parse_number<std::uint64_t>(header[3], "seed");

    const auto un = static_cast<std::size_t>(n);
    std::vector<Cost> costs;
    costs.reserve(un * un * un);
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        if (is_comment(line) || is_blank(line)) continue;
        std::istringstream ss(line);
        std::size_t count = 0;
        for (std::string tok; ss >> tok; ++count) costs.push_back(parse_number<Cost>(tok, "cost"));
        if (count != un) throw IoError("cost row " + std::to_string(rows + 1) + " has " +
                                       std::to_string(count) + " entries, expected " +
                                       std::to_string(n));
        ++rows;
    }
    if (rows != un * un)
        throw IoError("expected " + std::to_string(un * un) + " cost rows, found " +
                      std::to_string(rows));
    return Instance(n, std::move(costs), family, seed, std::move(name));
}

void save_instance(const std::filesystem::path& path, const Instance& inst) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot write " + path.string());
    write_instance(os, inst);
    if (!os) throw IoError("failed writing " + path.string());
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot read " + path.string());
    return read_instance(is, path.stem().string());
}

}  // namespace ap3
