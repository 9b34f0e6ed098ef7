# -*- coding: utf-8 -*-

"""
fbmlocal is a numerical toolkit for local independence of fractional
Brownian motion.
Copyright (C) 2014, the fbmlocal developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, <see http://www.gnu.org/licenses/>.
"""

import logging
from .exceptions import ValidationError

LOGGER = logging.getLogger( __name__ )

# dict
def namespace( args ):

    """
    argparse dialect to convert a parsed Namespace into a RunConfig
    compatible dictionary. Omitted flags (None) are dropped, so they never
    override the config file or the defaults.

    @param args: Parsed command line
    @type args: argparse.Namespace

    @return: RunConfig compatible dictionary
    @rtype: dict
    """

    return { key : value for key, value in vars( args ).items() \
        if value is not None }

# dict
def configFile( path ):

    """
    Key-value config file dialect. Every non-empty line is "key = value",
    lines starting with '#' are comments. Keys may use '-' or '_' and an
    optional leading '--', so command line flags can be copied verbatim.

    @param path: Path of the config file
    @type path: str

    @return: RunConfig compatible dictionary
    @rtype: dict
    """

    data = {}
    try:
        with open( path, 'r' ) as stream:
            lines = stream.read().splitlines()

    except IOError as e:
        raise ValidationError( 'config file {!r} can not be read: {}'.format( path, e ) )

    for number, line in enumerate( lines, 1 ):
        line = line.strip()
        if not line or line.startswith( '#' ):
            continue

        if '=' not in line:
            raise ValidationError( '{}:{}: expected "key = value", got {!r}'.format( path, number, line ) )

        key, value = [ part.strip() for part in line.split( '=', 1 ) ]
        key = key.lstrip( '-' ).replace( '-', '_' )
        if not key:
            raise ValidationError( '{}:{}: empty key'.format( path, number ) )

        data[ key ] = value

    LOGGER.debug( 'config file %s: %s', path, ', '.join( sorted( data ) ) )
    return data

# dict
def flattenAbsData( value_dict ):

    """
    Flat a multi-dimensional dictionary into one-dimensional dictionary.
    The keys will be concatenated with '_'.

    @param value_dict: Multi-dimensional dictionary
    @type value_dict: dict

    @return: One-dimensional dictionary
    @rtype: dict
    """

    r_dict = {}
    for key, value in ( value_dict or {} ).items():
        if not isinstance( value, dict ):
            r_dict[ key ] = value
            continue

        for ikey, ivalue in flattenAbsData( value ).items():
            r_dict[ '{}_{}'.format( key, ikey ) ] = ivalue

    return r_dict
