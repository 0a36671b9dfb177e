#include "tsvdkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tsvdkit/error.hpp"

namespace tsvdkit {

using nlohmann::json;

Tensor3 parse_tensor(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(e.what());
    }
    if (!doc.is_object())
        throw FormatError("tensor document must be an object with fields 'dims' and 'data'");

    const auto dims = doc.find("dims");
    if (dims == doc.end())
        throw FormatError("field 'dims': missing");
    if (!dims->is_array() || dims->size() != 3)
        throw FormatError("field 'dims': expected [m, n, p]");
    std::size_t extent[3];
    for (std::size_t a = 0; a < 3; ++a) {
        const auto& d = (*dims)[a];
        if (!d.is_number_integer() || d.get<long long>() <= 0)
            throw FormatError("field 'dims'[" + std::to_string(a) + "]: expected a positive integer, got " +
                              d.dump());
        extent[a] = d.get<std::size_t>();
    }

    const auto data = doc.find("data");
    if (data == doc.end())
        throw FormatError("field 'data': missing");
    if (!data->is_array())
        throw FormatError("field 'data': expected an array of numbers");
    const std::size_t expected = extent[0] * extent[1] * extent[2];
    if (data->size() != expected)
        throw FormatError("field 'data': dims " + dims->dump() + " need " + std::to_string(expected) +
                          " numbers, got " + std::to_string(data->size()));
    std::vector<double> entries;
    entries.reserve(expected);
    for (std::size_t idx = 0; idx < expected; ++idx) {
        const auto& x = (*data)[idx];
        if (!x.is_number())
            throw FormatError("field 'data'[" + std::to_string(idx) + "]: expected a number, got " + x.dump());
        entries.push_back(x.get<double>());
    }
    return Tensor3(extent[0], extent[1], extent[2], std::move(entries));
}

std::string format_tensor(const Tensor3& a)
{
    json doc;
    doc["dims"] = {a.m(), a.n(), a.p()};
    doc["data"] = std::vector<double>(a.data().begin(), a.data().end());
    return doc.dump() + "\n";
}

Tensor3 read_tensor_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_tensor(buf.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_tensor_file(const std::filesystem::path& path, const Tensor3& a)
{
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot write " + path.string());
    out << format_tensor(a);
    if (!out)
        throw FormatError("write failed for " + path.string());
}

} // namespace tsvdkit
