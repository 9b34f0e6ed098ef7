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

import sys
import logging
import argparse
from . import dialects, commands
from .runconfig import RunConfig, mergeSources
from .exceptions import ValidationError, NumericalError

LOGGER = logging.getLogger( __name__ )

# Exit statuses
SUCCESS = 0
VALIDATION_ERROR = 1
QUALITY_FAILURE = 2

class ArgumentParser( argparse.ArgumentParser ):

    """
    argparse parser which reports unknown flags and malformed command
    lines as ValidationError, so they share the exit status of the
    other precondition violations.
    """

    # void
    def error( self, message ):
        raise ValidationError( '{}: {}'.format( self.prog, message ) )

# ArgumentParser
def buildParser():

    """
    Command line parser with one subparser per command; the flags are
    registered by the parameters of the command's schema.

    @rtype: cli.ArgumentParser
    """

    parser = ArgumentParser( 
        prog = 'fbmlocal', 
        allow_abbrev = False,
        description = 'Local independence of fractional Brownian motion: angles, mutual '
                      'information and their scaling laws.'
    )

    subparsers = parser.add_subparsers( dest = 'command', metavar = 'COMMAND' )
    subparsers.required = True

    for name, command in commands.COMMANDS.items():
        subparser = subparsers.add_parser( name, help = command.getHelp(), 
            description = command.getHelp(), allow_abbrev = False )
        command.addArguments( subparser )

    return parser

# void
def configureLogging( verbose = False ):
    logging.basicConfig( 
        level = logging.DEBUG if verbose else logging.WARNING,
        format = '%(levelname)s %(name)s: %(message)s'
    )
    logging.getLogger().setLevel( logging.DEBUG if verbose else logging.WARNING )
    logging.captureWarnings( True )

# int
def run( argv = None, stdout = None, stderr = None ):

    """
    Runs one command line.

    @param argv: Arguments without the program name (sys.argv[1:] if None)
    @type argv: list<str>

    @param stdout: Stream of the summary
    @type stdout: file

    @param stderr: Stream of the error messages
    @type stderr: file

    @return: 0 on success, 1 on a validation error, 2 on a numerical
        quality failure
    @rtype: int
    """

    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = buildParser().parse_args( argv )

    except ValidationError as e:
        stderr.write( 'error: {}\n'.format( e.msg ) )
        return VALIDATION_ERROR

    except SystemExit as e:
        return e.code or SUCCESS

    command = commands.COMMANDS[ args.command ]
    values = dialects.namespace( args )
    values.pop( 'command', None )

    try:
        from_file = dialects.configFile( values['config'] ) if values.get( 'config' ) else {}
        run_config = RunConfig( command, mergeSources( from_file, values ) )

    except ValidationError as e:
        stderr.write( 'error: {}\n'.format( e.msg ) )
        return VALIDATION_ERROR

    configureLogging( run_config.get( 'verbose' ) )

    valid, errors = run_config.isValid( return_list = True )
    if not valid:
        for name, message in errors:
            stderr.write( 'error: {} {}: {}\n'.format( args.command, name, message ) )

        return VALIDATION_ERROR

    LOGGER.info( 'running %s', args.command )
    try:
        result = command.execute( run_config.getValue() )
        command.write( result, run_config )

    except ValidationError as e:
        stderr.write( 'error: {}: {}\n'.format( args.command, e.msg ) )
        return VALIDATION_ERROR

    except NumericalError as e:
        LOGGER.error( '%s failed: %s', args.command, e )
        stderr.write( 'numerical failure: {}: {}\n'.format( args.command, e ) )
        return QUALITY_FAILURE

    stdout.write( command.summarize( result ) + '\n' )

    if command.isFailed( result, run_config.get( 'strict' ) ):
        return QUALITY_FAILURE

    return SUCCESS

# void
def main():
    sys.exit( run() )
