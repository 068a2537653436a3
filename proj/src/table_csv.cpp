#include "empo/table_csv.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "empo/text.hpp"

namespace empo {

namespace csv {

std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty() && !was_quoted) {
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            was_quoted = false;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted)
        throw std::invalid_argument("unterminated quoted field");
    fields.push_back(std::move(field));
    return fields;
}

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace csv

namespace {

const char* const kHeader = "metric,n,distribution,mean,sd,trials";

std::string format_value(double v, Metric metric, NumberStyle style, GridField field) {
    if (style == NumberStyle::significant6)
        return text::significant(v, 6);
    if (metric == Metric::comparisons)
        return text::shortest(v);
    return field == GridField::mean ? text::fixed(v, 4) : text::fixed(v, 6);
}

void write_metadata(std::ostream& out, const MeasurementTable& table) {
    out << "# metric=" << to_string(table.metric) << '\n';
    if (table.metadata.seed)
        out << "# seed=" << *table.metadata.seed << '\n';
    if (table.metric == Metric::time) {
        if (table.metadata.clock_resolution)
            out << "# clock_resolution_s=" << text::significant(*table.metadata.clock_resolution, 6)
                << '\n';
        if (!table.metadata.host.empty())
            out << "# host=" << table.metadata.host << '\n';
        if (!table.metadata.timestamp.empty())
            out << "# timestamp=" << table.metadata.timestamp << '\n';
    }
}

}  // namespace

void write_measurement_csv(std::ostream& out, const MeasurementTable& table, NumberStyle style) {
    write_metadata(out, table);
    out << kHeader << '\n';
    for (const auto& row : table.rows) {
        out << to_string(table.metric) << ',' << row.n << ',' << csv::quote(row.spec.to_string())
            << ',' << format_value(row.mean, table.metric, style, GridField::mean) << ','
            << format_value(row.sd, table.metric, style, GridField::sd) << ',' << row.trials
            << '\n';
    }
}

MeasurementTable read_measurement_csv(std::istream& in) {
    MeasurementTable table;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    bool metric_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (text::trim(line).empty())
            continue;
        if (line.front() == '#') {
            auto body = text::trim(std::string_view(line).substr(1));
            auto eq = body.find('=');
            if (eq != std::string_view::npos) {
                auto key = text::trim(body.substr(0, eq));
                auto value = std::string(text::trim(body.substr(eq + 1)));
                try {
                    if (key == "seed")
                        table.metadata.seed =
                            static_cast<std::uint64_t>(std::stoull(value));
                    else if (key == "clock_resolution_s")
                        table.metadata.clock_resolution = text::parse_double(value, "clock");
                    else if (key == "host")
                        table.metadata.host = value;
                    else if (key == "timestamp")
                        table.metadata.timestamp = value;
                } catch (const std::exception& e) {
                    throw CsvError(line_no, std::string("bad metadata: ") + e.what());
                }
            }
            continue;
        }
        if (!header_seen) {
            if (line != kHeader)
                throw CsvError(line_no, std::string("expected header '") + kHeader + "'");
            header_seen = true;
            continue;
        }
        try {
            auto f = csv::split_record(line);
            if (f.size() != 6)
                throw std::invalid_argument("expected 6 fields, got " + std::to_string(f.size()));
            auto metric = parse_metric(f[0]);
            if (metric_seen && metric != table.metric)
                throw std::invalid_argument("mixed metrics in one table");
            table.metric = metric;
            metric_seen = true;
            auto n = text::parse_int(f[1], "n");
            if (n < 1)
                throw std::invalid_argument("n must be >= 1");
            auto spec = DistributionSpec::parse(f[2]);
            auto mean = text::parse_double(f[3], "mean");
            auto sd = text::parse_double(f[4], "sd");
            if (sd < 0.0)
                throw std::invalid_argument("sd must be >= 0");
            auto trials = text::parse_int(f[5], "trials");
            if (trials < 1)
                throw std::invalid_argument("trials must be >= 1");
            table.rows.push_back(MeasurementRow{static_cast<std::size_t>(n), spec, mean, sd,
                                                static_cast<std::size_t>(trials), {}});
        } catch (const CsvError&) {
            throw;
        } catch (const std::exception& e) {
            throw CsvError(line_no, e.what());
        }
    }
    if (!header_seen)
        throw CsvError(line_no == 0 ? 1 : line_no, "missing header");
    return table;
}

void write_grid_csv(std::ostream& out, const MeasurementTable& table, GridField field,
                    NumberStyle style) {
    auto specs = table.distributions();
    std::vector<MeasurementTable::Column> cols;
    out << 'n';
    for (const auto& spec : specs) {
        out << ',' << csv::quote(spec.to_string());
        cols.push_back(table.column(spec));
    }
    out << '\n';

    std::vector<double> ns;
    for (const auto& col : cols)
        for (double n : col.ns)
            if (std::find(ns.begin(), ns.end(), n) == ns.end())
                ns.push_back(n);
    std::sort(ns.begin(), ns.end());

    for (double n : ns) {
        out << static_cast<std::size_t>(n);
        for (const auto& col : cols) {
            out << ',';
            auto it = std::find(col.ns.begin(), col.ns.end(), n);
            if (it == col.ns.end())
                continue;
            auto i = static_cast<std::size_t>(it - col.ns.begin());
            double v = field == GridField::mean ? col.means[i] : col.sds[i];
            out << format_value(v, table.metric, style, field);
        }
        out << '\n';
    }
}

}  // namespace empo
